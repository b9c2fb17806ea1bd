#include "btlab/presentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace btlab {

std::vector<int> cyclically_reduce(std::vector<int> word) {
  std::vector<int> out;
  out.reserve(word.size());
  for (int letter : word) {
    if (!out.empty() && out.back() == -letter) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  }
  std::size_t lo = 0;
  std::size_t hi = out.size();
  while (hi - lo >= 2 && out[lo] == -out[hi - 1]) {
    ++lo;
    --hi;
  }
  return {out.begin() + static_cast<std::ptrdiff_t>(lo), out.begin() + static_cast<std::ptrdiff_t>(hi)};
}

namespace {

// Generator g equals root^sign, or the identity when trivial.
struct Substitution {
  std::vector<int> parent;
  std::vector<int> sign;
  std::vector<bool> trivial;

  explicit Substitution(std::size_t n) : parent(n), sign(n, 1), trivial(n, false) {
    for (std::size_t g = 0; g < n; ++g) parent[g] = static_cast<int>(g);
  }

  // Returns the letter a letter rewrites to, or 0 for the identity.
  int resolve(int letter) {
    int g = std::abs(letter) - 1;
    int s = letter > 0 ? 1 : -1;
    while (parent[g] != g) {
      s *= sign[g];
      g = parent[g];
    }
    return trivial[g] ? 0 : s * (g + 1);
  }
};

}  // namespace

Presentation simplify(const Presentation& p) {
  Substitution sub(p.generators);
  std::vector<std::vector<int>> relators = p.relators;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& word : relators) {
      std::vector<int> rewritten;
      for (int letter : word) {
        if (int r = sub.resolve(letter); r != 0) rewritten.push_back(r);
      }
      word = cyclically_reduce(std::move(rewritten));
      if (word.size() == 1) {
        sub.trivial[std::abs(word[0]) - 1] = true;
        word.clear();
        changed = true;
      } else if (word.size() == 2 && std::abs(word[0]) != std::abs(word[1])) {
        // x^a y^b = 1 gives x = y^(-a b).
        const int x = std::abs(word[0]) - 1;
        const int a = word[0] > 0 ? 1 : -1;
        const int b = word[1] > 0 ? 1 : -1;
        sub.parent[x] = std::abs(word[1]) - 1;
        sub.sign[x] = -a * b;
        word.clear();
        changed = true;
      }
    }
  }

  std::vector<int> renumber(p.generators, -1);
  Presentation out;
  for (std::size_t g = 0; g < p.generators; ++g) {
    if (sub.parent[g] == static_cast<int>(g) && !sub.trivial[g]) renumber[g] = static_cast<int>(out.generators++);
  }
  std::set<std::vector<int>> seen;
  for (const auto& word : relators) {
    if (word.empty()) continue;
    std::vector<int> mapped;
    for (int letter : word) {
      const int g = renumber[std::abs(letter) - 1];
      mapped.push_back(letter > 0 ? g + 1 : -(g + 1));
    }
    if (seen.insert(mapped).second) out.relators.push_back(std::move(mapped));
  }
  return out;
}

namespace {

class CosetTable {
 public:
  CosetTable(std::size_t generators, std::size_t budget) : width_(2 * generators), budget_(budget) { add_row(); }

  static constexpr int kNone = -1;

  std::size_t column(int letter) const {
    const auto g = static_cast<std::size_t>(std::abs(letter) - 1);
    return letter > 0 ? 2 * g : 2 * g + 1;
  }
  static std::size_t inverse(std::size_t col) { return col ^ 1U; }

  int& at(int coset, std::size_t col) { return table_[static_cast<std::size_t>(coset) * width_ + col]; }

  bool live(int coset) const { return parent_[static_cast<std::size_t>(coset)] == coset; }
  std::size_t defined() const { return parent_.size(); }
  bool exhausted() const { return exhausted_; }

  std::size_t live_count() const {
    std::size_t count = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c) count += live(static_cast<int>(c)) ? 1 : 0;
    return count;
  }

  // Returns false when the budget is exhausted.
  bool define(int coset, std::size_t col) {
    if (parent_.size() >= budget_) {
      exhausted_ = true;
      return false;
    }
    const int fresh = add_row();
    at(coset, col) = fresh;
    at(fresh, inverse(col)) = coset;
    return true;
  }

  void scan_and_fill(int coset, const std::vector<int>& word) {
    int f = coset;
    int b = coset;
    std::ptrdiff_t i = 0;
    std::ptrdiff_t j = static_cast<std::ptrdiff_t>(word.size()) - 1;
    for (;;) {
      while (i <= j && at(f, column(word[i])) != kNone) f = at(f, column(word[i++]));
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, inverse(column(word[j]))) != kNone) b = at(b, inverse(column(word[j--])));
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        at(f, column(word[i])) = b;
        at(b, inverse(column(word[i]))) = f;
        return;
      }
      if (!define(f, column(word[i]))) return;
    }
  }

 private:
  int add_row() {
    const int id = static_cast<int>(parent_.size());
    parent_.push_back(id);
    table_.resize(table_.size() + width_, kNone);
    return id;
  }

  int rep(int k) {
    int root = k;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[k] != root) {
      const int next = parent_[k];
      parent_[k] = root;
      k = next;
    }
    return root;
  }

  void merge(int k, int l, std::vector<int>& queue) {
    const int a = rep(k);
    const int b = rep(l);
    if (a == b) return;
    parent_[std::max(a, b)] = std::min(a, b);
    queue.push_back(std::max(a, b));
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const int gamma = queue[q];
      for (std::size_t x = 0; x < width_; ++x) {
        const int delta = at(gamma, x);
        if (delta == kNone) continue;
        at(delta, inverse(x)) = kNone;
        const int mu = rep(gamma);
        const int nu = rep(delta);
        if (at(mu, x) != kNone) {
          merge(nu, at(mu, x), queue);
        } else if (at(nu, inverse(x)) != kNone) {
          merge(mu, at(nu, inverse(x)), queue);
        } else {
          at(mu, x) = nu;
          at(nu, inverse(x)) = mu;
        }
      }
    }
  }

  std::size_t width_;
  std::size_t budget_;
  bool exhausted_ = false;
  std::vector<int> parent_;
  std::vector<int> table_;
};

}  // namespace

CosetEnumeration enumerate_cosets(const Presentation& p, std::size_t budget) {
  CosetEnumeration result;
  if (p.generators == 0) {
    result.complete = true;
    result.index = 1;
    result.cosets_defined = 1;
    return result;
  }
  CosetTable table(p.generators, std::max<std::size_t>(budget, 1));
  for (int alpha = 0; alpha < static_cast<int>(table.defined()); ++alpha) {
    for (const auto& word : p.relators) {
      if (!table.live(alpha)) break;
      table.scan_and_fill(alpha, word);
      if (table.exhausted()) break;
    }
    for (std::size_t x = 0; x < 2 * p.generators && table.live(alpha) && !table.exhausted(); ++x) {
      if (table.at(alpha, x) == CosetTable::kNone) table.define(alpha, x);
    }
    if (table.exhausted()) {
      result.cosets_defined = table.defined();
      return result;
    }
  }
  result.complete = true;
  result.index = table.live_count();
  result.cosets_defined = table.defined();
  return result;
}

}  // namespace btlab
