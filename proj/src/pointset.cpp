#include "l2disc/pointset.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "l2disc/errors.hpp"
#include "l2disc/numtheory.hpp"

namespace l2disc {

PointSet::PointSet(int dim, std::vector<double> coords, std::optional<ExactCoords> exact)
    : dim_(dim), coords_(std::move(coords)), exact_(std::move(exact)) {
    if (dim_ < 1) throw DimensionMismatch("point set dimension must be >= 1");
    if (coords_.empty()) throw EmptyPointSet("point set must contain at least one point");
    if (coords_.size() % dim_ != 0)
        throw DimensionMismatch("coordinate count is not a multiple of the dimension");
    for (double c : coords_) {
        if (!(c >= 0.0 && c < 1.0))
            throw OutOfRange("coordinate " + std::to_string(c) + " outside [0,1)");
    }
    if (exact_) {
        if (exact_->num.size() != coords_.size() || exact_->den.size() != std::size_t(dim_))
            throw DimensionMismatch("exact metadata shape mismatch");
    }
}

double van_der_corput(std::uint64_t k) {
    double r = 0.0;
    double base = 0.5;
    while (k != 0) {
        if (k & 1u) r += base;
        base *= 0.5;
        k >>= 1;
    }
    return r;
}

namespace {

std::uint64_t bit_reverse(std::uint64_t k, int bits) {
    std::uint64_t r = 0;
    for (int i = 0; i < bits; ++i) {
        r = (r << 1) | (k & 1u);
        k >>= 1;
    }
    return r;
}

} // namespace

PointSet hammersley(int m) {
    if (m < 0) throw BadParams("hammersley order must be non-negative");
    if (m > 40) throw IntegerOverflow("hammersley order out of supported range");
    const std::int64_t n = std::int64_t(1) << m;
    std::vector<double> coords;
    coords.reserve(2 * n);
    ExactCoords exact;
    exact.num.reserve(2 * n);
    exact.den = {n, n};
    for (std::int64_t k = 0; k < n; ++k) {
        const std::int64_t rev = std::int64_t(bit_reverse(std::uint64_t(k), m));
        coords.push_back(double(k) / double(n));
        coords.push_back(double(rev) / double(n));
        exact.num.push_back(k);
        exact.num.push_back(rev);
    }
    return PointSet(2, std::move(coords), std::move(exact));
}

PointSet rational_lattice(std::int64_t p, std::int64_t q) {
    if (q < 1) throw NonPositiveModulus("rational lattice needs q >= 1, got " + std::to_string(q));
    const std::int64_t pm = ((p % q) + q) % q;
    std::vector<double> coords;
    coords.reserve(2 * q);
    ExactCoords exact;
    exact.num.reserve(2 * q);
    exact.den = {q, q};
    for (std::int64_t k = 0; k < q; ++k) {
        const std::int64_t r = std::int64_t((__int128)k * pm % q);
        coords.push_back(double(k) / double(q));
        coords.push_back(double(r) / double(q));
        exact.num.push_back(k);
        exact.num.push_back(r);
    }
    return PointSet(2, std::move(coords), std::move(exact));
}

PointSet fibonacci_lattice(int n) {
    if (n < 1) throw BadParams("fibonacci lattice index must be >= 1");
    const std::int64_t q = fibonacci(n);
    const std::int64_t p = fibonacci(n - 1) % q;
    return rational_lattice(p, q);
}

PointSet regular_grid(int m, int d) {
    if (m < 1) throw BadParams("grid resolution must be >= 1");
    if (d < 1) throw DimensionMismatch("grid dimension must be >= 1");
    std::int64_t n = 1;
    for (int i = 0; i < d; ++i) {
        if (__builtin_mul_overflow(n, std::int64_t(m), &n) || n > (std::int64_t(1) << 40))
            throw IntegerOverflow("grid size m^d out of supported range");
    }
    std::vector<double> coords(std::size_t(n) * d);
    ExactCoords exact;
    exact.num.resize(std::size_t(n) * d);
    exact.den.assign(d, m);
    for (std::int64_t idx = 0; idx < n; ++idx) {
        std::int64_t rest = idx;
        for (int i = d - 1; i >= 0; --i) {
            const std::int64_t digit = rest % m;
            rest /= m;
            coords[idx * d + i] = double(digit) / double(m);
            exact.num[idx * d + i] = digit;
        }
    }
    return PointSet(d, std::move(coords), std::move(exact));
}

PointSet geometric_shift(const PointSet& ps, const std::vector<double>& delta) {
    if (int(delta.size()) != ps.dim())
        throw DimensionMismatch("shift vector dimension " + std::to_string(delta.size()) +
                                " != point set dimension " + std::to_string(ps.dim()));
    for (double dl : delta) {
        if (!(dl >= 0.0 && dl <= 1.0)) throw OutOfRange("shift component outside [0,1]");
    }
    std::vector<double> coords(ps.coords());
    const int d = ps.dim();
    for (std::size_t k = 0; k < ps.size(); ++k) {
        for (int i = 0; i < d; ++i) {
            double c = coords[k * d + i] + delta[i];
            if (c >= 1.0) c -= 1.0;
            coords[k * d + i] = c;
        }
    }
    return PointSet(d, std::move(coords));
}

DyadicShift::DyadicShift(int dim, int width, std::vector<std::uint64_t> words)
    : dim_(dim), width_(width), words_(std::move(words)) {
    if (dim_ < 1) throw DimensionMismatch("shift dimension must be >= 1");
    if (width_ < 1 || width_ > 64) throw BadParams("dyadic shift width must be in 1..64");
    if (words_.size() != std::size_t(dim_))
        throw DimensionMismatch("one digit word per axis required");
    if (width_ < 64) {
        const std::uint64_t mask = (std::uint64_t(1) << width_) - 1;
        for (std::uint64_t w : words_) {
            if (w & ~mask) throw BadParams("digit word wider than the declared precision");
        }
    }
}

DyadicShift DyadicShift::zero(int dim, int width) {
    return DyadicShift(dim, width, std::vector<std::uint64_t>(dim, 0));
}

DyadicShift DyadicShift::random(int dim, int width, std::mt19937_64& rng) {
    std::vector<std::uint64_t> words(dim);
    for (auto& w : words) {
        w = rng();
        if (width < 64) w >>= (64 - width);
    }
    return DyadicShift(dim, width, std::move(words));
}

int DyadicShift::digit(int axis, int i) const {
    return int((words_[axis] >> (width_ - i)) & 1u);
}

double DyadicShift::value(int axis) const {
    std::uint64_t w = words_[axis];
    // Digits beyond double precision are dropped toward zero.
    int bits = 64 - __builtin_clzll(w | 1u);
    if (bits > 53) w &= ~((std::uint64_t(1) << (bits - 53)) - 1);
    return std::ldexp(double(w), -width_);
}

namespace {

// First w dyadic digits of c in [0,1) as an integer in [0, 2^w).
std::uint64_t leading_digits(double c, int w, bool truncate) {
    if (c == 0.0) return 0;
    int exp;
    const double mant = std::frexp(c, &exp); // c = mant * 2^exp, mant in [0.5, 1)
    std::uint64_t m = std::uint64_t(std::ldexp(mant, 53));
    const int shift = exp - 53 + w; // c * 2^w = m * 2^shift
    if (shift >= 0) return m << shift;
    const bool inexact = -shift >= 64 || (m & ((std::uint64_t(1) << (-shift)) - 1)) != 0;
    if (inexact && !truncate)
        throw InexactDyadicRepresentation(
            "coordinate " + std::to_string(c) + " has dyadic digits beyond position " +
            std::to_string(w) + "; raise the precision or enable truncation");
    return -shift >= 64 ? 0 : m >> (-shift);
}

// n / 2^w truncated onto the 2^-53 grid. Truncating at the fixed digit
// position (not at the leading significant bit) is what makes the shift an
// exact involution on 53-digit coordinates.
double from_digits(std::uint64_t n, int w) {
    if (w > 53) n &= ~((std::uint64_t(1) << (w - 53)) - 1);
    return std::ldexp(double(n), -w);
}

} // namespace

PointSet digital_shift(const PointSet& ps, const DyadicShift& delta, bool truncate) {
    if (delta.dim() != ps.dim())
        throw DimensionMismatch("shift dimension " + std::to_string(delta.dim()) +
                                " != point set dimension " + std::to_string(ps.dim()));
    const int d = ps.dim();
    const int w = delta.width();
    std::vector<double> coords(ps.coords());
    for (std::size_t k = 0; k < ps.size(); ++k) {
        for (int i = 0; i < d; ++i) {
            const std::uint64_t bits = leading_digits(coords[k * d + i], w, truncate);
            coords[k * d + i] = from_digits(bits ^ delta.word(i), w);
        }
    }
    return PointSet(d, std::move(coords));
}

PointSet random_pointset(std::size_t n, int d, std::uint64_t seed) {
    if (n < 1) throw EmptyPointSet("random point set needs n >= 1");
    if (d < 1) throw DimensionMismatch("random point set dimension must be >= 1");
    std::mt19937_64 rng(seed);
    std::vector<double> coords(n * d);
    for (auto& c : coords) c = double(rng() >> 11) * 0x1p-53;
    return PointSet(d, std::move(coords));
}

void write_pointset(std::ostream& os, const PointSet& ps) {
    os << "# d=" << ps.dim() << " N=" << ps.size() << "\n";
    char buf[64];
    for (std::size_t k = 0; k < ps.size(); ++k) {
        for (int i = 0; i < ps.dim(); ++i) {
            std::snprintf(buf, sizeof buf, "%.17g", ps(k, i));
            if (i) os << ' ';
            os << buf;
        }
        os << "\n";
    }
}

PointSet read_pointset(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) throw ParseError("missing point set header");
    int d = 0;
    long long n = 0;
    if (std::sscanf(header.c_str(), "# d=%d N=%lld", &d, &n) != 2)
        throw ParseError("malformed point set header: " + header);
    if (d < 1 || n < 1) throw ParseError("header declares an empty point set");
    std::vector<double> coords;
    coords.reserve(std::size_t(n) * d);
    for (long long k = 0; k < n; ++k) {
        std::string line;
        if (!std::getline(is, line)) throw ParseError("unexpected end of point set file");
        std::istringstream row(line);
        for (int i = 0; i < d; ++i) {
            double c;
            if (!(row >> c)) throw ParseError("short row in point set file: " + line);
            coords.push_back(c);
        }
    }
    return PointSet(d, std::move(coords));
}

void write_pointset_file(const std::string& path, const PointSet& ps) {
    std::ofstream os(path);
    if (!os) throw IoError("cannot open " + path + " for writing");
    write_pointset(os, ps);
    if (!os) throw IoError("failed writing " + path);
}

PointSet read_pointset_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open " + path);
    return read_pointset(is);
}

} // namespace l2disc
