#include "flowcount/chambers.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>

#include <json.hpp>

#include "flowcount/algebra/lp.hpp"
#include "flowcount/error.hpp"

namespace flowcount {

namespace {

int sign_of(const BigInt& x) { return sgn(x) > 0 ? 1 : (sgn(x) < 0 ? -1 : 0); }

bool subset_of(IndexSet a, IndexSet b) { return (a & ~b) == 0; }

/// Calls f on every k-subset of {0..n-1}, in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k, const std::function<void(IndexSet)>& f) {
  std::function<void(std::size_t, std::size_t, IndexSet)> rec = [&](std::size_t start, std::size_t left, IndexSet acc) {
    if (left == 0) {
      f(acc);
      return;
    }
    for (std::size_t i = start; i + left <= n; ++i) rec(i + 1, left - 1, acc | (IndexSet{1} << i));
  };
  rec(0, k, 0);
}

IntVector negated(const IntVector& v) {
  IntVector out(v);
  for (auto& x : out) x = -x;
  return out;
}

}  // namespace

std::vector<std::size_t> members(IndexSet set) {
  std::vector<std::size_t> out;
  while (set != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(set)));
    set &= set - 1;
  }
  return out;
}

IndexSet make_index_set(std::span<const std::size_t> indices) {
  IndexSet out = 0;
  for (auto i : indices) {
    if (i >= 64) throw InputError("index set limited to 64 columns");
    out |= IndexSet{1} << i;
  }
  return out;
}

std::vector<IndexSet> minimal_nonfaces(std::vector<IndexSet> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::vector<IndexSet> out;
  for (auto f : family) {
    bool minimal = true;
    for (auto g : family) {
      if (g != f && subset_of(g, f)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(f);
  }
  return out;
}

std::vector<IndexSet> minimal_transversals(const std::vector<IndexSet>& family) {
  std::vector<IndexSet> current{0};
  for (auto edge : family) {
    std::vector<IndexSet> next;
    for (auto t : current) {
      if ((t & edge) != 0) {
        next.push_back(t);
        continue;
      }
      for (auto i : members(edge)) next.push_back(t | (IndexSet{1} << i));
    }
    current = minimal_nonfaces(std::move(next));
  }
  return current;
}

std::vector<IntVector> positive_roots(const RootConfiguration& cfg) {
  const std::size_t r = cfg.rank;
  std::vector<IntVector> out;
  for (std::size_t i = 0; i <= r; ++i) {
    for (std::size_t j = i + 1; j <= r; ++j) {
      if (cfg.m(i, j) == 0) continue;
      IntVector v(r, BigInt(0));
      v[i] = 1;
      if (j < r) v[j] = -1;
      out.push_back(std::move(v));
    }
  }
  return out;
}

ChamberComplex::ChamberComplex(std::vector<IntVector> columns) : columns_(std::move(columns)) {
  if (columns_.empty()) throw InputError("chamber complex needs at least one column");
  if (columns_.size() > 64) throw InputError("chamber complex limited to 64 columns");
  dimension_ = columns_.front().size();
  if (dimension_ == 0) throw InputError("columns must be nonempty vectors");
  RationalMatrix rows;
  for (const auto& c : columns_) {
    if (c.size() != dimension_) throw InputError("columns have different lengths");
    if (std::all_of(c.begin(), c.end(), [](const BigInt& x) { return sgn(x) == 0; })) {
      throw InputError("zero column");
    }
    rows.push_back(to_rational(c));
  }
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    for (std::size_t j = i + 1; j < columns_.size(); ++j) {
      if (columns_[i] == columns_[j]) throw InputError("columns must be distinct");
    }
  }
  if (rank(rows, dimension_) != dimension_) throw InputError("columns do not span the space");

  if (dimension_ == 1) return;
  std::set<IntVector> seen;
  for_each_subset(columns_.size(), dimension_ - 1, [&](IndexSet subset) {
    RationalMatrix span_rows;
    for (auto i : members(subset)) span_rows.push_back(rows[i]);
    auto kernel = kernel_basis(span_rows, dimension_);
    if (kernel.size() != 1) return;
    IntVector normal = kernel.front();
    canonicalize_sign(normal);
    if (!seen.insert(normal).second) return;
    Wall w;
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      const int s = sign_of(dot(normal, columns_[i]));
      const IndexSet bit = IndexSet{1} << i;
      (s == 0 ? w.zeros : s > 0 ? w.pos : w.neg) |= bit;
    }
    w.normal = std::move(normal);
    walls_.push_back(std::move(w));
  });
}

bool ChamberComplex::is_basic(IndexSet set) const {
  if (static_cast<std::size_t>(std::popcount(set)) != dimension_) return false;
  if (set >> columns_.size() != 0 && columns_.size() < 64) return false;
  RationalMatrix rows;
  for (auto i : members(set)) rows.push_back(to_rational(columns_[i]));
  return rank(rows, dimension_) == dimension_;
}

bool ChamberComplex::cone_contains(IndexSet sigma, std::span<const BigRational> point) const {
  std::vector<RationalVector> cols;
  for (auto i : members(sigma)) cols.push_back(to_rational(columns_[i]));
  auto coeffs = solve_in_basis(cols, RationalVector(point.begin(), point.end()));
  if (!coeffs) throw InputError("cone_contains: subset is not basic");
  return std::all_of(coeffs->begin(), coeffs->end(), [](const BigRational& x) { return sgn(x) >= 0; });
}

std::vector<IndexSet> ChamberComplex::lex_tope_positions() const {
  std::vector<IndexSet> out;
  for (const auto& w : walls_) {
    int s = 0;
    for (const auto& c : columns_) {
      s = sign_of(dot(w.normal, c));
      if (s != 0) break;
    }
    if (s == 0) throw InternalError("lexicographic tope lies on a wall");
    out.push_back(w.side(s));
  }
  return out;
}

Chamber ChamberComplex::lexicographic_chamber() const {
  std::vector<IndexSet> basics;
  if (dimension_ == 1) {
    const int s = sign_of(columns_.front().front());
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      if (sign_of(columns_[i].front()) == s) basics.push_back(IndexSet{1} << i);
    }
  } else {
    basics = minimal_transversals(minimal_nonfaces(lex_tope_positions()));
    for (auto b : basics) {
      if (!is_basic(b)) throw InternalError("minimal transversal of the lexicographic non-faces is not basic");
    }
  }
  Chamber c = make_chamber(std::move(basics));
  for (auto b : c.basics) {
    if (!cone_contains(b, c.witness)) throw InternalError("lexicographic chamber witness escapes a cone");
  }
  return c;
}

std::size_t ChamberComplex::wall_through(IndexSet facet) const {
  for (std::size_t k = 0; k < walls_.size(); ++k) {
    if (subset_of(facet, walls_[k].zeros)) return k;
  }
  throw InternalError("no wall through a cone facet");
}

namespace {

struct FacetRow {
  std::size_t wall;
  int side;
  IntVector normal;  // side * wall normal
};

std::vector<FacetRow> facet_rows(const ChamberComplex& cx, const Chamber& chamber,
                                 const std::function<std::size_t(IndexSet)>& wall_through) {
  std::vector<FacetRow> out;
  std::set<std::pair<std::size_t, int>> seen;
  const auto& walls = cx.walls();
  for (auto sigma : chamber.basics) {
    for (auto i : members(sigma)) {
      const std::size_t k = wall_through(sigma & ~(IndexSet{1} << i));
      const int side = sign_of(dot(walls[k].normal, cx.columns()[i]));
      if (!seen.insert({k, side}).second) continue;
      out.push_back({k, side, side > 0 ? walls[k].normal : negated(walls[k].normal)});
    }
  }
  return out;
}

/// Conditions 1-3 for wall w with the chamber on `side`; necessary for
/// essentiality, used to discard rows before the LP test.
bool passes_prefilter(const ChamberComplex& cx, const Chamber& chamber, const Wall& w, int side) {
  const std::size_t r = cx.dimension();
  const std::set<IndexSet> in(chamber.basics.begin(), chamber.basics.end());
  std::set<IndexSet> nus;
  for (auto sigma : chamber.basics) {
    const bool facet = static_cast<std::size_t>(std::popcount(sigma & w.zeros)) == r - 1;
    const bool cut = (sigma & w.pos) != 0 && (sigma & w.neg) != 0;
    if (!facet && !cut) return false;
    if (facet) nus.insert(sigma & w.zeros);
  }
  if (nus.empty()) return false;
  for (auto nu : nus) {
    for (int s : {side, -side}) {
      for (auto j : members(w.side(s))) {
        const bool present = in.count(nu | (IndexSet{1} << j)) > 0;
        if (present != (s == side)) return false;
      }
    }
  }
  return true;
}

}  // namespace

IneqSystem ChamberComplex::inequalities(const Chamber& chamber) const {
  IneqSystem system(dimension_);
  if (dimension_ == 1) {
    for (auto sigma : chamber.basics) system.add(columns_[members(sigma).front()]);
    return system;
  }
  for (const auto& row : facet_rows(*this, chamber, [this](IndexSet f) { return wall_through(f); })) {
    system.add(row.normal);
  }
  return system;
}

std::vector<EssentialWall> ChamberComplex::essential_walls(const Chamber& chamber) const {
  if (dimension_ == 1 || chamber.basics.empty()) return {};
  auto rows = facet_rows(*this, chamber, [this](IndexSet f) { return wall_through(f); });
  std::erase_if(rows, [&](const FacetRow& row) { return !passes_prefilter(*this, chamber, walls_[row.wall], row.side); });

  for (std::size_t i = 0; i < rows.size();) {
    IneqSystem others(dimension_);
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (j != i) others.add(rows[j].normal);
    }
    if (sgn(lp_max(negated(rows[i].normal), others)) == 0) {
      rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  std::vector<EssentialWall> out;
  for (const auto& row : rows) out.push_back({row.wall, row.side, walls_[row.wall].interior()});
  std::sort(out.begin(), out.end(), [](const EssentialWall& a, const EssentialWall& b) { return a.wall < b.wall; });
  return out;
}

Chamber ChamberComplex::reflexion(const Chamber& chamber, std::size_t wall) const {
  if (wall >= walls_.size()) throw InputError("reflexion: wall index out of range");
  const auto essential = essential_walls(chamber);
  auto it = std::find_if(essential.begin(), essential.end(), [&](const EssentialWall& e) { return e.wall == wall; });
  if (it == essential.end()) throw InputError("reflexion: wall is not an essential wall of the chamber");
  if (!it->interior) throw InputError("reflexion: wall lies on the boundary of the cone");
  const Wall& w = walls_[wall];
  const std::size_t r = dimension_;

  std::vector<IndexSet> basics;
  std::set<IndexSet> nus;
  for (auto sigma : chamber.basics) {
    if (static_cast<std::size_t>(std::popcount(sigma & w.zeros)) == r - 1) {
      nus.insert(sigma & w.zeros);
    } else {
      basics.push_back(sigma);
    }
  }
  for (auto nu : nus) {
    for (auto j : members(w.side(-it->side))) basics.push_back(nu | (IndexSet{1} << j));
  }
  return make_chamber(std::move(basics));
}

std::vector<Chamber> ChamberComplex::enumerate() const {
  std::vector<Chamber> out;
  std::set<std::vector<IndexSet>> visited;
  std::vector<Chamber> stack{lexicographic_chamber()};
  visited.insert(stack.back().basics);
  while (!stack.empty()) {
    Chamber current = std::move(stack.back());
    stack.pop_back();
    std::vector<Chamber> found;
    for (const auto& e : essential_walls(current)) {
      if (!e.interior) continue;
      Chamber next = reflexion(current, e.wall);
      if (visited.insert(next.basics).second) found.push_back(std::move(next));
    }
    out.push_back(std::move(current));
    // Push in reverse so the lowest wall is explored first.
    for (auto i = found.rbegin(); i != found.rend(); ++i) stack.push_back(std::move(*i));
  }
  return out;
}

Chamber ChamberComplex::locate(std::span<const BigRational> point) const {
  if (point.size() != dimension_) throw InputError("locate: point has the wrong dimension");
  for (const auto& w : walls_) {
    if (sgn(dot(to_rational(w.normal), point)) == 0) throw InputError("locate: point lies on a wall");
  }
  std::vector<IndexSet> basics;
  for_each_subset(columns_.size(), dimension_, [&](IndexSet sigma) {
    if (is_basic(sigma) && cone_contains(sigma, point)) basics.push_back(sigma);
  });
  if (basics.empty()) throw InputError("locate: point lies outside the cone of the columns");
  std::sort(basics.begin(), basics.end());
  return Chamber{std::move(basics), RationalVector(point.begin(), point.end())};
}

std::optional<RationalVector> ChamberComplex::witness(const std::vector<IndexSet>& basics) const {
  Chamber probe{basics, {}};
  const IneqSystem system = inequalities(probe);
  auto x = interior_point(system);
  if (!x) return std::nullopt;

  BigInt bound = 1;
  for (const auto& row : system.rows()) {
    for (const auto& c : row) bound = std::max(bound, BigInt(abs(c)));
  }
  const long r = static_cast<long>(dimension_);
  // Every row has slack >= 1 at x; a shift v with |n.v| <= 1/2 keeps it interior.
  for (long j = 1;; ++j) {
    BigInt top;
    mpz_ui_pow_ui(top.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(r - 1));
    const BigInt scale = 2 * bound * top * r;
    RationalVector y = *x;
    BigInt power = 1;
    for (long k = 0; k < r; ++k) {
      y[static_cast<std::size_t>(k)] += make_rational(power, scale);
      power *= j;
    }
    const bool regular = std::all_of(walls_.begin(), walls_.end(), [&](const Wall& w) {
      return sgn(dot(to_rational(w.normal), y)) != 0;
    });
    if (regular) return y;
  }
}

Chamber ChamberComplex::make_chamber(std::vector<IndexSet> basics) const {
  std::sort(basics.begin(), basics.end());
  basics.erase(std::unique(basics.begin(), basics.end()), basics.end());
  auto point = witness(basics);
  if (!point) throw InternalError("chamber has empty interior");
  return Chamber{std::move(basics), std::move(*point)};
}

std::string chambers_to_json(const ChamberComplex& complex, const std::vector<Chamber>& chambers) {
  using nlohmann::json;
  json cols = json::array();
  for (const auto& c : complex.columns()) {
    json v = json::array();
    for (const auto& x : c) v.push_back(x.get_si());
    cols.push_back(std::move(v));
  }
  json list = json::array();
  for (const auto& ch : chambers) {
    json basics = json::array();
    for (auto b : ch.basics) {
      json set = json::array();
      for (auto i : members(b)) set.push_back(i + 1);
      basics.push_back(std::move(set));
    }
    json witness = json::array();
    for (const auto& x : ch.witness) witness.push_back(to_string(x));
    list.push_back({{"basics", std::move(basics)}, {"witness", std::move(witness)}});
  }
  return json{{"columns", std::move(cols)}, {"chambers", std::move(list)}}.dump();
}

}  // namespace flowcount
