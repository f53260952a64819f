#include "toda/oracle.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>

namespace toda {

Permutation Permutation::identity(unsigned d) {
  std::vector<std::uint8_t> images(d);
  std::iota(images.begin(), images.end(), std::uint8_t{0});
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(unsigned d, unsigned a, unsigned b) {
  if (a == b || a >= d || b >= d) throw PreconditionError("transposition needs two distinct points");
  Permutation p = identity(d);
  std::swap(p.images_[a], p.images_[b]);
  return p;
}

Permutation::Permutation(std::vector<std::uint8_t> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (auto i : images_) {
    if (i >= images_.size() || hit[i]) throw PreconditionError("images do not form a permutation");
    hit[i] = true;
  }
}

Permutation Permutation::from_lehmer_index(unsigned d, std::uint32_t index) {
  std::vector<std::uint8_t> pool(d);
  std::iota(pool.begin(), pool.end(), std::uint8_t{0});
  std::vector<std::uint32_t> radix(d, 1);
  for (unsigned i = 1; i < d; ++i) radix[d - 1 - i] = radix[d - i] * i;
  std::vector<std::uint8_t> images;
  images.reserve(d);
  for (unsigned i = 0; i < d; ++i) {
    const std::uint32_t digit = index / radix[i];
    index %= radix[i];
    if (digit >= pool.size()) throw PreconditionError("Lehmer index out of range");
    images.push_back(pool[digit]);
    pool.erase(pool.begin() + digit);
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::uint32_t Permutation::lehmer_index() const {
  std::uint32_t index = 0;
  const auto d = images_.size();
  for (std::size_t i = 0; i < d; ++i) {
    std::uint32_t smaller = 0;
    for (std::size_t j = i + 1; j < d; ++j) smaller += images_[j] < images_[i] ? 1 : 0;
    index = index * static_cast<std::uint32_t>(d - i) + smaller;
  }
  return index;
}

Permutation operator*(const Permutation& p, const Permutation& o) {
  if (p.degree() != o.degree()) throw PreconditionError("permutation degrees differ");
  std::vector<std::uint8_t> images(p.degree());
  for (unsigned i = 0; i < p.degree(); ++i) images[i] = p.images_[o.images_[i]];
  return Permutation(std::move(images));
}

namespace {

void guard(unsigned d, unsigned max_degree) {
  if (d == 0) throw PreconditionError("oracle needs degree d >= 1");
  if (d > max_degree) {
    throw ResourceLimitError("oracle degree " + std::to_string(d) + " exceeds the configured bound " +
                             std::to_string(max_degree));
  }
}

std::vector<std::pair<unsigned, unsigned>> transpositions(unsigned d) {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned a = 0; a < d; ++a) {
    for (unsigned b = a + 1; b < d; ++b) out.emplace_back(a, b);
  }
  return out;
}

// Count vector over S_d (indexed by Lehmer rank) after r right-multiplications
// by the transposition class sum; the identity entry is recorded per r.
class GroupAlgebraWalk {
 public:
  explicit GroupAlgebraWalk(unsigned d) {
    std::uint32_t order = 1;
    for (unsigned i = 2; i <= d; ++i) order *= i;
    const auto ts = transpositions(d);
    neighbours_.resize(static_cast<std::size_t>(order) * ts.size());
    stride_ = ts.size();
    for (std::uint32_t s = 0; s < order; ++s) {
      const Permutation sigma = Permutation::from_lehmer_index(d, s);
      for (std::size_t t = 0; t < ts.size(); ++t) {
        neighbours_[s * stride_ + t] = (sigma * Permutation::transposition(d, ts[t].first, ts[t].second)).lehmer_index();
      }
    }
    state_.assign(order, BigInt(0));
    state_[0] = 1;  // rank 0 is the identity
    at_identity_.push_back(1);
  }

  BigInt identity_count(unsigned r) {
    std::lock_guard lock(mutex_);
    std::vector<BigInt> next(state_.size());
    while (at_identity_.size() <= r) {
      // Transpositions are involutions, so pulling from sigma*t equals pushing to it.
      for (std::size_t s = 0; s < state_.size(); ++s) {
        BigInt acc = 0;
        for (std::size_t t = 0; t < stride_; ++t) acc += state_[neighbours_[s * stride_ + t]];
        next[s] = std::move(acc);
      }
      state_.swap(next);
      at_identity_.push_back(state_[0]);
    }
    return at_identity_[r];
  }

 private:
  std::mutex mutex_;
  std::size_t stride_ = 0;
  std::vector<std::uint32_t> neighbours_;
  std::vector<BigInt> state_;
  std::vector<BigInt> at_identity_;
};

GroupAlgebraWalk& walk_for(unsigned d) {
  static std::mutex mutex;
  static std::map<unsigned, std::unique_ptr<GroupAlgebraWalk>> walks;
  std::lock_guard lock(mutex);
  auto& slot = walks[d];
  if (!slot) slot = std::make_unique<GroupAlgebraWalk>(d);
  return *slot;
}

BigInt identity_count_unguarded(unsigned d, unsigned r) {
  if (d == 0) return r == 0 ? 1 : 0;  // empty block
  return walk_for(d).identity_count(r);
}

// T(d, r) = A(d, r) - sum over the proper block containing point 1.
class TransitiveSieve {
 public:
  const BigInt& get(unsigned d, unsigned r) {
    std::lock_guard lock(mutex_);
    return compute(d, r);
  }

 private:
  const BigInt& compute(unsigned d, unsigned r) {
    if (auto it = memo_.find({d, r}); it != memo_.end()) return it->second;
    BigInt value = identity_count_unguarded(d, r);
    for (unsigned s = 1; s < d; ++s) {
      const BigInt choose_block = binomial(d - 1, s - 1);
      for (unsigned r1 = 0; r1 <= r; ++r1) {
        const BigInt rest = identity_count_unguarded(d - s, r - r1);
        if (rest == 0) continue;
        const BigInt& inner = compute(s, r1);
        if (inner == 0) continue;
        value -= choose_block * binomial(r, r1) * inner * rest;
      }
    }
    return memo_.emplace(std::pair{d, r}, std::move(value)).first->second;
  }

  std::mutex mutex_;
  std::map<std::pair<unsigned, unsigned>, BigInt> memo_;
};

TransitiveSieve& sieve() {
  static TransitiveSieve instance;
  return instance;
}

// Restricted growth strings: block[i] <= 1 + max(block[0..i-1]).
template <typename Visit>
void for_each_set_partition(unsigned n, Visit&& visit) {
  if (n == 0) {
    visit(std::vector<unsigned>{});
    return;
  }
  std::vector<unsigned> label(n, 0);
  std::vector<unsigned> prefix_max(n, 0);
  while (true) {
    const unsigned blocks = prefix_max[n - 1] + 1;
    std::vector<unsigned> sizes(blocks, 0);
    for (unsigned l : label) ++sizes[l];
    visit(sizes);
    // increment from the right
    int i = static_cast<int>(n) - 1;
    while (i > 0 && label[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) return;
    ++label[i];
    prefix_max[i] = std::max(prefix_max[i - 1], label[i]);
    for (unsigned j = i + 1; j < n; ++j) {
      label[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

}  // namespace

BigInt count_identity_tuples(unsigned d, unsigned r, unsigned max_degree) {
  guard(d, max_degree);
  return identity_count_unguarded(d, r);
}

BigInt count_transitive_tuples(unsigned d, unsigned r, unsigned max_degree) {
  guard(d, max_degree);
  return sieve().get(d, r);
}

BigInt identity_count_from_partitions(unsigned d, unsigned r, unsigned max_degree) {
  guard(d, max_degree);
  BigInt total = 0;
  for_each_set_partition(d, [&](const std::vector<unsigned>& sizes) {
    // Exponential convolution over blocks: ways[x] counts labelled
    // distributions of x factors among the blocks seen so far.
    std::vector<BigInt> ways(r + 1, BigInt(0));
    ways[0] = 1;
    for (unsigned size : sizes) {
      std::vector<BigInt> next(r + 1, BigInt(0));
      for (unsigned x = 0; x <= r; ++x) {
        for (unsigned y = 0; y <= x; ++y) {
          if (ways[x - y] == 0) continue;
          const BigInt& t = sieve().get(size, y);
          if (t != 0) next[x] += binomial(x, y) * ways[x - y] * t;
        }
      }
      ways.swap(next);
    }
    total += ways[r];
  });
  return total;
}

std::size_t count_set_partitions(unsigned n) {
  std::size_t count = 0;
  for_each_set_partition(n, [&](const std::vector<unsigned>&) { ++count; });
  return count;
}

FactorizationCount count_by_direct_enumeration(unsigned d, unsigned r, unsigned max_degree) {
  guard(d, max_degree);
  const auto ts = transpositions(d);
  constexpr double kMaxTuples = 5e7;
  if (!ts.empty() && std::pow(static_cast<double>(ts.size()), r) > kMaxTuples) {
    throw ResourceLimitError("direct enumeration of " + std::to_string(ts.size()) + "^" + std::to_string(r) +
                             " tuples exceeds the enumeration budget");
  }
  FactorizationCount out{d, r, 0, 0};
  if (ts.empty()) {
    if (r == 0) out.all_count = out.transitive_count = 1;
    return out;
  }

  std::vector<std::size_t> chosen(r);
  std::vector<std::vector<std::uint8_t>> products(r + 1, std::vector<std::uint8_t>(d));
  std::iota(products[0].begin(), products[0].end(), std::uint8_t{0});

  auto transitive = [&] {
    std::vector<unsigned> parent(d);
    std::iota(parent.begin(), parent.end(), 0U);
    auto find = [&](unsigned x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    unsigned components = d;
    for (std::size_t idx : chosen) {
      const unsigned a = find(ts[idx].first);
      const unsigned b = find(ts[idx].second);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
    return components == 1;
  };

  auto dfs = [&](auto&& self, unsigned depth) -> void {
    if (depth == r) {
      for (unsigned i = 0; i < d; ++i) {
        if (products[r][i] != i) return;
      }
      ++out.all_count;
      if (transitive()) ++out.transitive_count;
      return;
    }
    for (std::size_t t = 0; t < ts.size(); ++t) {
      chosen[depth] = t;
      products[depth + 1] = products[depth];
      std::swap(products[depth + 1][ts[t].first], products[depth + 1][ts[t].second]);
      self(self, depth + 1);
    }
  };
  dfs(dfs, 0);
  return out;
}

Rational hurwitz_oracle(unsigned g, unsigned d, OracleBackend backend, unsigned max_degree) {
  guard(d, max_degree);
  const unsigned r = 2 * g + 2 * d - 2;
  const BigInt count = backend == OracleBackend::direct ? count_by_direct_enumeration(d, r, max_degree).transitive_count
                                                        : count_transitive_tuples(d, r, max_degree);
  return Rational(count, factorial(d));
}

}  // namespace toda
