#include "kuranet/rng.hpp"

#include <cmath>

#include "kuranet/errors.hpp"

namespace kuranet {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// splitmix64 finalizer: bijective on 64-bit words.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t master_seed)
    : key_(mix64(master_seed + kGolden)), master_(master_seed) {}

RngStream RngStream::derive(std::uint64_t label) const {
    RngStream child;
    child.key_ = mix64(key_ + kGolden * (label + 1));
    child.master_ = master_;
    child.path_ = path_;
    child.path_.push_back(label);
    return child;
}

std::uint64_t RngStream::next_u64() {
    ++counter_;
    return mix64(key_ + kGolden * counter_);
}

double RngStream::uniform01() {
    // Top 53 bits scaled by 2^-53: exact, in [0, 1).
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) {
    if (!(lo <= hi)) {
        throw InvalidParameterError("uniform: lo > hi");
    }
    const double u = uniform01();
    if (lo == hi) {
        return lo;
    }
    double v = lo + (hi - lo) * u;
    if (v >= hi) {  // guard against rounding up to the open endpoint
        v = std::nextafter(hi, lo);
    }
    return v;
}

double RngStream::normal(double mean, double sigma) {
    if (!(sigma >= 0.0)) {
        throw InvalidParameterError("normal: sigma < 0");
    }
    // Box-Muller, cosine branch. 1-u1 lies in (0,1], so the log is finite.
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
    const double z = r * std::cos(2.0 * M_PI * u2);
    return mean + sigma * z;
}

}  // namespace kuranet
