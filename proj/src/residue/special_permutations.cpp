#include <algorithm>

#include "flowcount/error.hpp"
#include "flowcount/residue.hpp"

namespace flowcount {

namespace {

template <typename T>
bool prefix_sums_nonnegative(std::span<const T> a) {
  if (a.empty()) return true;
  T sum(0);
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    sum += a[i];
    if (sgn(sum) < 0) return false;
  }
  return true;
}

}  // namespace

bool check_in_cone(std::span<const BigInt> a) { return prefix_sums_nonnegative(a); }
bool check_in_cone(std::span<const BigRational> a) { return prefix_sums_nonnegative(a); }

BigRational default_epsilon(const RootConfiguration& cfg, unsigned long divisor) {
  if (divisor == 0) throw InputError("epsilon divisor must be positive");
  const unsigned long r = std::max<std::size_t>(cfg.rank, 1);
  const unsigned long m = std::max(cfg.max_mult, 1u);
  return make_rational(BigInt(1), BigInt(2) * BigInt(m) * BigInt(r) * BigInt(r) * BigInt(divisor));
}

RationalVector deform(std::span<const BigRational> a, const RootConfiguration& cfg,
                      const BigRational& epsilon) {
  const std::size_t r = cfg.rank;
  if (a.size() != r + 1) throw InputError("deform: excess vector must have length r+1");
  RationalVector roots(r + 1, BigRational(0));
  for (std::size_t i = 0; i <= r; ++i) {
    for (std::size_t j = i + 1; j <= r; ++j) {
      roots[i] += cfg.m(i, j);
      roots[j] -= cfg.m(i, j);
    }
  }
  const BigRational eps2 = epsilon * epsilon;
  RationalVector out(a.begin(), a.end());
  for (std::size_t i = 0; i <= r; ++i) {
    out[i] += epsilon * roots[i];
    out[i] += i < r ? eps2 : -eps2 * BigRational(static_cast<long>(r));
  }
  for (auto& x : out) x.canonicalize();
  return out;
}

RationalVector deform(std::span<const BigRational> a, const RootConfiguration& cfg) {
  return deform(a, cfg, default_epsilon(cfg));
}

bool is_regular(std::span<const BigRational> d) {
  const std::size_t r = d.size();
  if (r > 20) throw InputError("is_regular: exhaustive check limited to 20 coordinates");
  // Gray-code walk over all nonempty subsets.
  BigRational sum(0);
  std::vector<bool> in(r, false);
  for (std::uint64_t k = 1; k < (std::uint64_t{1} << r); ++k) {
    const auto bit = static_cast<std::size_t>(__builtin_ctzll(k));
    in[bit] = !in[bit];
    if (in[bit]) sum += d[bit];
    else sum -= d[bit];
    if (sgn(sum) == 0) return false;
  }
  return true;
}

namespace {

/// Prefix recursion: after a nonnegative prefix sum the next index must be
/// larger, after a negative one smaller.
template <typename T>
class SpSearch {
 public:
  SpSearch(std::vector<T> d, std::vector<SpecialPermutation>& out) : d_(std::move(d)), used_(d_.size()), out_(out) {}

  void run() {
    const std::size_t r = d_.size();
    w_.reserve(r);
    for (std::size_t first = 0; first < r; ++first) {
      used_[first] = true;
      w_.push_back(first);
      extend(d_[first], 0);
      w_.pop_back();
      used_[first] = false;
    }
  }

 private:
  void extend(const T& prefix, unsigned descents) {
    const std::size_t r = d_.size();
    if (w_.size() == r) {
      out_.push_back({w_, descents});
      return;
    }
    const std::size_t last = w_.back();
    const bool ascend = prefix >= 0;
    const std::size_t lo = ascend ? last + 1 : 0;
    const std::size_t hi = ascend ? r : last;
    for (std::size_t next = lo; next < hi; ++next) {
      if (used_[next]) continue;
      used_[next] = true;
      w_.push_back(next);
      extend(prefix + d_[next], descents + (ascend ? 0 : 1));
      w_.pop_back();
      used_[next] = false;
    }
  }

  std::vector<T> d_;
  std::vector<bool> used_;
  std::vector<std::size_t> w_;
  std::vector<SpecialPermutation>& out_;
};

}  // namespace

std::vector<SpecialPermutation> special_permutations(std::span<const BigRational> d, std::size_t r) {
  if (d.size() < r) throw InputError("special_permutations: vector too short");
  std::vector<SpecialPermutation> out;
  if (r == 0) {
    out.push_back({});
    return out;
  }
  // Only signs of partial sums matter, so clear denominators first.
  BigInt common = 1;
  for (std::size_t i = 0; i < r; ++i) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), d[i].get_den_mpz_t());
  std::vector<BigInt> scaled;
  BigInt total = 0;
  for (std::size_t i = 0; i < r; ++i) {
    scaled.push_back(d[i].get_num() * (common / d[i].get_den()));
    total += abs(scaled.back());
  }
  if (total.fits_slong_p()) {
    std::vector<long> small;
    for (const auto& x : scaled) small.push_back(x.get_si());
    SpSearch<long>(std::move(small), out).run();
  } else {
    SpSearch<BigInt>(std::move(scaled), out).run();
  }
  return out;
}

}  // namespace flowcount
