#pragma once

#include <cstdint>
#include <vector>

namespace kuranet {

/// Deterministic counter-based random stream with labeled substreams.
///
/// A stream is identified by a master seed plus an ordered list of derivation
/// labels (its lineage). Derivation hashes the parent identity together with
/// the label, so a child is fully determined by (master seed, label path) and
/// never consumes or perturbs the parent's draws. Output is produced by a
/// splitmix64-style bijective mix of key + counter, which makes every draw a
/// pure function of (identity, draw index): integer arithmetic only, so the
/// sequence is identical on every platform.
///
/// Substream label conventions used throughout the toolkit:
///   0 = graph topology, 1 = natural frequencies, 2 = initial phases,
///   3+k = replicate index k.
class RngStream {
  public:
    explicit RngStream(std::uint64_t master_seed);

    /// Child stream for `label`; the parent is left untouched.
    RngStream derive(std::uint64_t label) const;

    /// Next raw 64-bit word; advances the stream by one draw.
    std::uint64_t next_u64();

    /// Uniform draw on [lo, hi); consumes one word. lo == hi returns lo.
    /// Throws InvalidParameterError if lo > hi.
    double uniform(double lo, double hi);

    /// Uniform draw on [0, 1); consumes one word.
    double uniform01();

    /// Gaussian draw via Box-Muller; consumes exactly two words.
    /// Throws InvalidParameterError if sigma < 0.
    double normal(double mean, double sigma);

    std::uint64_t master_seed() const { return master_; }
    const std::vector<std::uint64_t>& path() const { return path_; }
    std::uint64_t draws() const { return counter_; }

  private:
    RngStream() = default;

    std::uint64_t key_ = 0;      // hashed identity of (master seed, path)
    std::uint64_t counter_ = 0;  // draws consumed so far
    std::uint64_t master_ = 0;
    std::vector<std::uint64_t> path_;
};

/// Free-function spelling of RngStream::derive.
inline RngStream derive_stream(const RngStream& parent, std::uint64_t label) {
    return parent.derive(label);
}

}  // namespace kuranet
