#include "bqlp/snapshot.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>

#include "bqlp/errors.hpp"

namespace bqlp {

namespace {

constexpr std::size_t kNameBytes = 8;
constexpr std::array<const char*, 4> kFieldNames = {"u_x", "u_y", "u_z", "theta"};
constexpr std::size_t kHeaderBytes = 4 + 4 + 4 + 4 + 8 + 8 + 8;

class Writer {
public:
    void bytes(const void* data, std::size_t n) {
        const auto* p = static_cast<const unsigned char*>(data);
        out.insert(out.end(), p, p + n);
    }
    void u32(std::uint32_t v) {
        for (int i = 0; i < 4; ++i) out.push_back(static_cast<unsigned char>(v >> (8 * i)));
    }
    void u64(std::uint64_t v) {
        for (int i = 0; i < 8; ++i) out.push_back(static_cast<unsigned char>(v >> (8 * i)));
    }
    void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }

    std::vector<unsigned char> out;
};

class Reader {
public:
    explicit Reader(const std::vector<unsigned char>& in) : in_(in) {}

    void need(std::size_t n) const {
        if (pos_ + n > in_.size()) throw SnapshotError("truncated BQLP snapshot");
    }
    std::uint32_t u32() {
        need(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(in_[pos_++]) << (8 * i);
        return v;
    }
    std::uint64_t u64() {
        need(8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(in_[pos_++]) << (8 * i);
        return v;
    }
    double f64() { return std::bit_cast<double>(u64()); }
    std::string fixed_string(std::size_t n) {
        need(n);
        std::string s(reinterpret_cast<const char*>(in_.data() + pos_), n);
        pos_ += n;
        return s.substr(0, s.find('\0'));
    }
    std::size_t remaining() const { return in_.size() - pos_; }

private:
    const std::vector<unsigned char>& in_;
    std::size_t pos_ = 0;
};

const ScalarField& field_by_slot(const SolverState& s, std::size_t slot) {
    return slot < 3 ? s.u[slot] : s.theta;
}

}  // namespace

std::vector<unsigned char> encode_snapshot(const SolverState& state, double nu, double kappa) {
    const GridSpec& grid = state.grid();
    Writer w;
    w.bytes(kSnapshotMagic, 4);
    w.u32(kSnapshotVersion);
    w.u32(static_cast<std::uint32_t>(grid.n));
    w.u32(static_cast<std::uint32_t>(kFieldNames.size()));
    w.f64(state.t);
    w.f64(nu);
    w.f64(kappa);
    for (const char* name : kFieldNames) {
        std::array<char, kNameBytes> buf{};
        std::memcpy(buf.data(), name, std::min(std::strlen(name), kNameBytes));
        w.bytes(buf.data(), kNameBytes);
    }
    for (std::size_t slot = 0; slot < kFieldNames.size(); ++slot) {
        for (const Complex& c : field_by_slot(state, slot).coefficients()) {
            w.f64(c.real());
            w.f64(c.imag());
        }
    }
    return std::move(w.out);
}

Snapshot decode_snapshot(const std::vector<unsigned char>& bytes, std::optional<int> expected_n,
                         const GridSpec& grid_template) {
    if (bytes.size() < 4 || std::memcmp(bytes.data(), kSnapshotMagic, 4) != 0) {
        throw SnapshotError("not a BQLP snapshot (bad magic)");
    }
    if (bytes.size() < kHeaderBytes) throw SnapshotError("truncated BQLP snapshot header");
    Reader r(bytes);
    r.u32();  // magic
    const std::uint32_t version = r.u32();
    if (version != kSnapshotVersion) {
        throw SnapshotError("unsupported BQLP snapshot version " + std::to_string(version) + " (reader supports " +
                            std::to_string(kSnapshotVersion) + ")");
    }
    const std::uint32_t n = r.u32();
    const std::uint32_t count = r.u32();
    if (n < 8 || n > 4096 || (n & (n - 1)) != 0) throw SnapshotError("invalid grid size in snapshot");
    if (expected_n && static_cast<int>(n) != *expected_n) {
        throw SnapshotError("snapshot grid n = " + std::to_string(n) + " does not match requested n = " +
                            std::to_string(*expected_n));
    }
    if (count != kFieldNames.size()) throw SnapshotError("unexpected field count " + std::to_string(count));

    Snapshot snap;
    snap.state.t = r.f64();
    snap.nu = r.f64();
    snap.kappa = r.f64();
    for (const char* expected : kFieldNames) {
        if (r.fixed_string(kNameBytes) != expected) throw SnapshotError("unexpected field roster in snapshot");
    }

    GridSpec grid = grid_template;
    grid.n = static_cast<int>(n);
    const std::size_t per_field = grid.spectral_size();
    if (r.remaining() != per_field * count * 16) throw SnapshotError("truncated BQLP snapshot payload");

    snap.state.u = VectorField(grid);
    snap.state.theta = ScalarField(grid);
    for (std::size_t slot = 0; slot < count; ++slot) {
        ScalarField& f = slot < 3 ? snap.state.u[slot] : snap.state.theta;
        for (Complex& c : f.coefficients()) {
            const double re = r.f64();
            const double im = r.f64();
            c = Complex(re, im);
        }
    }
    return snap;
}

void save_snapshot(const SolverState& state, double nu, double kappa, const std::filesystem::path& path) {
    const auto bytes = encode_snapshot(state, nu, kappa);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("failed writing " + path.string());
}

Snapshot load_snapshot(const std::filesystem::path& path, std::optional<int> expected_n,
                       const GridSpec& grid_template) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SnapshotError("cannot open snapshot " + path.string());
    std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return decode_snapshot(bytes, expected_n, grid_template);
}

}  // namespace bqlp
