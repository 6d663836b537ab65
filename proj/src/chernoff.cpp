#include "krep/chernoff.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "krep/error.hpp"
#include "krep/random.hpp"

namespace krep {

ChernoffFamily sample_family(std::size_t count, const FamilyParams& params,
                             std::uint64_t seed) {
  if (params.t > UINT32_MAX)
    throw Error(ErrorCode::kInvalidArgument, "segment size exceeds 2^32 - 1");
  ChernoffFamily family;
  family.params = params;
  family.seed = seed;
  family.sets.resize(count);

  const std::uint64_t threshold = bernoulli_threshold(params.p);
  RandomStream rng(seed);
  const auto t = static_cast<std::uint32_t>(params.t);
  for (auto& set : family.sets) {
    set.reserve(static_cast<std::size_t>(params.p * params.t * 1.1) + 16);
    for (std::uint32_t j = 0; j < t; ++j)
      if (rng.next_u32() < threshold) set.push_back(j);
  }
  return family;
}

namespace {

std::uint64_t intersect_sorted(const std::vector<std::uint32_t>& a,
                               const std::vector<std::uint32_t>& b,
                               std::vector<std::uint32_t>& out) {
  out.clear();
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out.size();
}

using Bits = std::vector<std::uint64_t>;

Bits to_bits(const std::vector<std::uint32_t>& set, std::uint64_t t) {
  Bits bits((t + 63) / 64, 0);
  for (std::uint32_t x : set) bits[x >> 6] |= std::uint64_t{1} << (x & 63);
  return bits;
}

std::uint64_t and_into(const Bits& a, const Bits& b, Bits& out) {
  std::uint64_t count = 0;
  out.resize(a.size());
  for (std::size_t w = 0; w < a.size(); ++w) {
    out[w] = a[w] & b[w];
    count += static_cast<std::uint64_t>(std::popcount(out[w]));
  }
  return count;
}

// Depth-first walk over subsets of members of size 1..m, carrying the
// intersection of the current prefix. Storage is either sorted lists or bit
// vectors; the walk itself is shared.
template <class Set>
class FamilyChecker {
 public:
  FamilyChecker(const std::vector<Set>& sets, const FamilyParams& params,
                std::size_t violation_limit)
      : sets_(sets), params_(params), limit_(violation_limit) {
    const std::uint32_t depth = std::min<std::uint64_t>(params.m, sets.size());
    prefixes_.resize(depth + 1);
    for (std::uint32_t l = 1; l <= depth; ++l) {
      const double mean = std::pow(params.p, l) * static_cast<double>(params.t);
      lower_.push_back((1.0 - params.epsilon) * mean);
      upper_.push_back((1.0 + params.epsilon) * mean);
    }
  }

  CertificateReport run(std::uint64_t (*count_of)(const Set&),
                        std::uint64_t (*intersect)(const Set&, const Set&, Set&)) {
    count_of_ = count_of;
    intersect_ = intersect;
    members_.clear();
    for (std::size_t j = 0; j < sets_.size() && !lower_.empty(); ++j)
      descend(j, nullptr);
    std::sort(report_.violations.begin(), report_.violations.end(),
              [](const FamilyViolation& a, const FamilyViolation& b) {
                if (a.members.size() != b.members.size())
                  return a.members.size() < b.members.size();
                return a.members < b.members;
              });
    report_.certified = report_.violation_count == 0;
    return std::move(report_);
  }

 private:
  void descend(std::size_t member, const Set* prefix) {
    const std::size_t level = members_.size() + 1;
    members_.push_back(static_cast<std::uint32_t>(member));
    std::uint64_t size;
    const Set* current;
    if (prefix == nullptr) {
      current = &sets_[member];
      size = count_of_(*current);
    } else {
      size = intersect_(*prefix, sets_[member], prefixes_[level]);
      current = &prefixes_[level];
    }
    record(level, size);
    if (level < lower_.size())
      for (std::size_t next = member + 1; next < sets_.size(); ++next)
        descend(next, current);
    members_.pop_back();
  }

  void record(std::size_t level, std::uint64_t size) {
    ++report_.checked;
    const double lo = lower_[level - 1], hi = upper_[level - 1];
    const auto actual = static_cast<double>(size);
    if (actual >= lo && actual <= hi) return;
    ++report_.violation_count;
    if (report_.violations.size() < limit_)
      report_.violations.push_back({members_, size, lo, hi});
  }

  const std::vector<Set>& sets_;
  FamilyParams params_;
  std::size_t limit_;
  std::vector<double> lower_, upper_;
  std::vector<Set> prefixes_;
  std::vector<std::uint32_t> members_;
  CertificateReport report_;
  std::uint64_t (*count_of_)(const Set&) = nullptr;
  std::uint64_t (*intersect_)(const Set&, const Set&, Set&) = nullptr;
};

}  // namespace

CertificateReport verify_family(const ChernoffFamily& family,
                                const FamilyCheckOptions& options) {
  const auto& params = family.params;
  if (params.t <= options.dense_threshold) {
    std::vector<Bits> bits;
    bits.reserve(family.sets.size());
    for (const auto& set : family.sets) bits.push_back(to_bits(set, params.t));
    FamilyChecker<Bits> checker(bits, params, options.violation_limit);
    return checker.run(
        [](const Bits& b) {
          std::uint64_t c = 0;
          for (auto w : b) c += static_cast<std::uint64_t>(std::popcount(w));
          return c;
        },
        and_into);
  }
  FamilyChecker<std::vector<std::uint32_t>> checker(family.sets, params,
                                                    options.violation_limit);
  return checker.run(
      [](const std::vector<std::uint32_t>& s) {
        return static_cast<std::uint64_t>(s.size());
      },
      intersect_sorted);
}

ChernoffFamily gen_verified_family(std::size_t count, const FamilyParams& params,
                                   std::uint64_t seed, std::uint32_t max_retries,
                                   const FamilyCheckOptions& options) {
  if (max_retries < 1)
    throw Error(ErrorCode::kInvalidArgument, "max_retries must be at least 1");
  CertificateReport last;
  for (std::uint32_t attempt = 0; attempt < max_retries; ++attempt) {
    ChernoffFamily family = sample_family(count, params, seed ^ attempt);
    last = verify_family(family, options);
    if (last.certified) {
      family.attempts = attempt + 1;
      return family;
    }
  }
  throw Error(ErrorCode::kRetriesExhausted,
              "no certified family after " + std::to_string(max_retries) +
                  " attempts; last sample:\n" + format_certificate(last));
}

std::string format_family(const ChernoffFamily& family) {
  std::ostringstream out;
  for (std::size_t j = 0; j < family.sets.size(); ++j) {
    out << j << ':';
    for (auto x : family.sets[j]) out << ' ' << x;
    out << '\n';
  }
  return out.str();
}

std::string format_certificate(const CertificateReport& report) {
  std::ostringstream out;
  out << (report.certified ? "CERTIFIED" : "NOT CERTIFIED") << " checked="
      << report.checked << " violations=" << report.violation_count << '\n';
  for (const auto& v : report.violations) {
    out << "  l=" << v.members.size() << " I={";
    for (std::size_t i = 0; i < v.members.size(); ++i)
      out << (i ? "," : "") << v.members[i];
    out << "} size=" << v.actual << " allowed=[" << v.lower << ", " << v.upper
        << "]\n";
  }
  return out.str();
}

}  // namespace krep
