#include "su3braid/matgroup.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace su3braid {

namespace {

struct SignedGen {
  int via;
  UnitaryMatrix matrix;
};

std::vector<SignedGen> signed_generators(const std::vector<GpElement>& gens) {
  std::vector<SignedGen> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const int idx = static_cast<int>(i) + 1;
    out.push_back({idx, gens[i].matrix});
    out.push_back({-idx, gens[i].matrix.inverse()});
  }
  return out;
}

Word concat(int head, const Word& tail) {
  Word w;
  w.reserve(tail.size() + 1);
  w.push_back(head);
  w.insert(w.end(), tail.begin(), tail.end());
  return w;
}

void require_subset(const FiniteMatrixGroup& group, const FiniteMatrixGroup& sub) {
  if (sub.dim() != group.dim()) throw NotASubgroup("dimension mismatch");
  for (const auto& e : sub.elements()) {
    if (!group.contains(e.matrix)) throw NotASubgroup("element not contained in the ambient group");
  }
}

std::vector<std::size_t> element_orders(const CayleyTable& table) {
  std::vector<std::size_t> orders(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    // Counts the non-identity powers i, i^2, ..., i^{m-1}, starting at 1.
    std::size_t n = 1;
    for (std::size_t p = i; p != 0; p = table.at(p, i)) ++n;
    orders[i] = n;
  }
  return orders;
}

// Size of the subgroup generated by the given element indices.
std::size_t generated_size(const CayleyTable& table, const std::vector<std::size_t>& gens) {
  std::vector<char> seen(table.size(), 0);
  std::vector<std::size_t> frontier{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t x : frontier) {
      for (std::size_t g : gens) {
        const std::size_t y = table.at(g, x);
        if (!seen[y]) {
          seen[y] = 1;
          ++count;
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  return count;
}

std::vector<std::size_t> prime_factors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

GpElement make_element(const UnitaryMatrix& m, int order, std::optional<Word> word) {
  return {m, m.matrix().key(order), std::move(word)};
}

std::optional<std::size_t> FiniteMatrixGroup::index_of(const std::string& key) const {
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  return std::nullopt;
}

std::optional<std::size_t> FiniteMatrixGroup::index_of(const UnitaryMatrix& m) const {
  if (m.dim() != dim_) return std::nullopt;
  const int order = m.matrix().scalar_order();
  if (scalar_order_ % order == 0) return index_of(m.matrix().key(scalar_order_));

  // Entries may still lie in this group's field.
  const int common = std::lcm(order, scalar_order_);
  Matrix lowered(dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      auto e = restrict_to(embed(m(i, j), common), scalar_order_);
      if (!e) return std::nullopt;
      lowered(i, j) = *e;
    }
  }
  return index_of(lowered.key(scalar_order_));
}

bool FiniteMatrixGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = i + 1; j < generators_.size(); ++j) {
      const auto& a = generators_[i].matrix;
      const auto& b = generators_[j].matrix;
      if (!(a * b == b * a)) return false;
    }
  }
  return true;
}

FiniteMatrixGroup close(std::span<const UnitaryMatrix> generators, std::size_t cap) {
  if (generators.empty()) throw std::invalid_argument("closure needs at least one generator");
  if (cap < 1) throw std::invalid_argument("closure cap must be >= 1");

  FiniteMatrixGroup g;
  g.dim_ = generators.front().dim();
  for (const auto& m : generators) {
    if (m.dim() != g.dim_) throw std::invalid_argument("generators differ in dimension");
    g.scalar_order_ = std::lcm(g.scalar_order_, m.matrix().scalar_order());
  }
  for (std::size_t i = 0; i < generators.size(); ++i) {
    g.generators_.push_back(make_element(generators[i].with_order(g.scalar_order_),
                                         g.scalar_order_, Word{static_cast<int>(i) + 1}));
  }
  const auto moves = signed_generators(g.generators_);

  g.elements_.push_back(
      make_element(UnitaryMatrix::identity(g.dim_, g.scalar_order_), g.scalar_order_, Word{}));
  g.steps_.push_back({0, 0});
  g.index_.emplace(g.elements_.front().key, 0);

  std::size_t layer_begin = 0;
  while (layer_begin < g.elements_.size()) {
    const std::size_t layer_end = g.elements_.size();
    // First discovery wins; the map orders the new layer by key.
    std::map<std::string, std::pair<UnitaryMatrix, FiniteMatrixGroup::Step>> fresh;
    for (std::size_t x = layer_begin; x < layer_end; ++x) {
      for (const auto& mv : moves) {
        UnitaryMatrix y = mv.matrix * g.elements_[x].matrix;
        std::string key = y.matrix().key(g.scalar_order_);
        if (g.index_.contains(key) || fresh.contains(key)) continue;
        fresh.emplace(std::move(key), std::make_pair(std::move(y), FiniteMatrixGroup::Step{x, mv.via}));
        if (g.elements_.size() + fresh.size() > cap) {
          throw GroupTooLarge("closure exceeded " + std::to_string(cap) + " elements");
        }
      }
    }
    for (auto& [key, entry] : fresh) {
      const auto& [parent, via] = entry.second;
      g.index_.emplace(key, g.elements_.size());
      g.elements_.push_back({std::move(entry.first), key, concat(via, *g.elements_[parent].word)});
      g.steps_.push_back(entry.second);
    }
    layer_begin = layer_end;
  }
  return g;
}

FiniteMatrixGroup close(std::initializer_list<UnitaryMatrix> generators, std::size_t cap) {
  return close(std::span<const UnitaryMatrix>(generators.begin(), generators.size()), cap);
}

std::size_t element_order(const GpElement& g, std::size_t cap) {
  return static_cast<std::size_t>(matrix_order(g.matrix, static_cast<long>(cap)));
}

FiniteMatrixGroup subgroup(const FiniteMatrixGroup& group, std::span<const GpElement> gens) {
  std::vector<UnitaryMatrix> mats;
  for (const auto& g : gens) {
    if (!group.contains(g.matrix)) throw GeneratorNotInGroup("generator is not in the group");
    mats.push_back(g.matrix.with_order(group.scalar_order()));
  }
  if (mats.empty()) mats.push_back(group.identity().matrix);
  FiniteMatrixGroup sub = close(mats, group.order());
  if (group.order() % sub.order() != 0) {
    throw std::logic_error("subgroup order does not divide the group order");
  }
  return sub;
}

FiniteMatrixGroup subgroup(const FiniteMatrixGroup& group, std::initializer_list<GpElement> gens) {
  return subgroup(group, std::span<const GpElement>(gens.begin(), gens.size()));
}

bool is_normal(const FiniteMatrixGroup& group, const FiniteMatrixGroup& sub) {
  require_subset(group, sub);
  for (const auto& g : group.generators()) {
    const UnitaryMatrix g_inv = g.matrix.inverse();
    for (const auto& n : sub.elements()) {
      if (!sub.contains(g.matrix * n.matrix * g_inv)) return false;
    }
  }
  return true;
}

FiniteMatrixGroup intersect(const FiniteMatrixGroup& s1, const FiniteMatrixGroup& s2) {
  if (s1.dim() != s2.dim()) throw std::invalid_argument("intersecting groups of different dimension");
  std::vector<const GpElement*> common;
  for (const auto& e : s1.elements()) {
    if (s2.contains(e.matrix)) common.push_back(&e);
  }
  // Greedy generating set: add an element only when the current closure
  // misses it.
  std::vector<UnitaryMatrix> gens{s1.identity().matrix};
  FiniteMatrixGroup current = close(gens, s1.order());
  for (const GpElement* e : common) {
    if (current.contains(e->matrix)) continue;
    if (gens.size() == 1 && gens.front().matrix().is_identity()) gens.clear();
    gens.push_back(e->matrix);
    current = close(gens, s1.order());
  }
  if (current.order() != common.size()) {
    throw std::logic_error("intersection of two groups is not closed");
  }
  return current;
}

std::vector<std::size_t> abelian_invariants(const FiniteMatrixGroup& group) {
  if (!group.is_abelian()) throw NotAbelian("group generators do not commute");
  const std::size_t n = group.order();
  if (n == 1) return {};

  const CayleyTable table(group);
  const auto orders = element_orders(table);

  // For each prime p, #{x : x^{p^k} = 1} = p^{sum_i min(e_i, k)} determines
  // the exponents e_i of the p-primary part.
  std::vector<std::vector<std::size_t>> prime_parts;
  for (std::size_t p : prime_factors(n)) {
    std::vector<std::size_t> at_least;  // at_least[k-1] = #{i : e_i >= k}
    std::size_t prev = 1;
    for (std::size_t pk = p;; pk *= p) {
      const std::size_t count = static_cast<std::size_t>(
          std::count_if(orders.begin(), orders.end(), [&](std::size_t o) { return pk % o == 0; }));
      if (count == prev) break;
      std::size_t ratio = count / prev, rank = 0;
      if (count % prev != 0) throw DecompositionNotFound("non-integral p-rank ratio");
      while (ratio > 1) {
        if (ratio % p != 0) throw DecompositionNotFound("p-rank ratio is not a power of p");
        ratio /= p;
        ++rank;
      }
      at_least.push_back(rank);
      prev = count;
    }
    // Exponent of the j-th largest cyclic p-factor.
    std::vector<std::size_t> factors(at_least.empty() ? 0 : at_least.front(), 1);
    for (std::size_t rank : at_least) {
      for (std::size_t j = 0; j < rank; ++j) factors[j] *= p;
    }
    prime_parts.push_back(std::move(factors));
  }

  std::size_t count = 0;
  for (const auto& part : prime_parts) count = std::max(count, part.size());
  std::vector<std::size_t> invariants(count, 1);
  for (const auto& part : prime_parts) {
    for (std::size_t j = 0; j < part.size(); ++j) invariants[j] *= part[j];
  }
  if (std::accumulate(invariants.begin(), invariants.end(), std::size_t{1},
                      std::multiplies<>()) != n) {
    throw DecompositionNotFound("invariant factors do not multiply to the group order");
  }

  // Witness: elements of the claimed orders that generate the whole group,
  // which forces the product to be direct.
  std::vector<std::size_t> chosen;
  std::function<bool(std::size_t)> search = [&](std::size_t depth) {
    if (depth == invariants.size()) return generated_size(table, chosen) == n;
    for (std::size_t x = 0; x < n; ++x) {
      if (orders[x] != invariants[depth]) continue;
      chosen.push_back(x);
      const std::size_t expected = std::accumulate(
          invariants.begin(), invariants.begin() + depth + 1, std::size_t{1}, std::multiplies<>());
      if (generated_size(table, chosen) == expected && search(depth + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!search(0)) throw DecompositionNotFound("no cyclic factors realize the invariants");
  return invariants;
}

SemidirectReport semidirect_verify(const FiniteMatrixGroup& group, const FiniteMatrixGroup& normal,
                                   const FiniteMatrixGroup& complement) {
  require_subset(group, normal);
  require_subset(group, complement);

  SemidirectReport report;
  report.normal = is_normal(group, normal);
  report.trivial_intersection = intersect(normal, complement).order() == 1;
  report.order_product = normal.order() * complement.order() == group.order();

  std::set<std::size_t> hit;
  bool inside = true;
  for (const auto& n : normal.elements()) {
    for (const auto& h : complement.elements()) {
      const auto idx = group.index_of(n.matrix * h.matrix);
      if (!idx) {
        inside = false;
        continue;
      }
      hit.insert(*idx);
    }
  }
  report.product_bijective = inside && hit.size() == normal.order() * complement.order() &&
                             hit.size() == group.order();
  return report;
}

std::pair<GpElement, GpElement> decompose(const UnitaryMatrix& g, const FiniteMatrixGroup& normal,
                                          const FiniteMatrixGroup& complement) {
  std::optional<std::pair<GpElement, GpElement>> found;
  for (const auto& h : complement.elements()) {
    const auto idx = normal.index_of(g * h.matrix.inverse());
    if (!idx) continue;
    if (found) throw NonUniqueFactorization("element factors through N*H in more than one way");
    found.emplace(normal[*idx], h);
  }
  if (!found) throw NoFactorization("element is not a product n*h");
  return *found;
}

GpElement word_eval(const Word& word, std::span<const GpElement> gens) {
  if (gens.empty()) throw std::invalid_argument("word evaluation needs at least one generator");
  int order = 1;
  for (const auto& g : gens) order = std::lcm(order, g.matrix.matrix().scalar_order());
  UnitaryMatrix acc = UnitaryMatrix::identity(gens.front().matrix.dim(), order);
  for (int idx : word) {
    const std::size_t i = static_cast<std::size_t>(idx < 0 ? -idx : idx);
    if (idx == 0 || i > gens.size()) {
      throw IndexOutOfRange("generator index " + std::to_string(idx) + " out of range");
    }
    const UnitaryMatrix& g = gens[i - 1].matrix;
    acc = acc * (idx > 0 ? g : g.inverse());
  }
  return make_element(acc.with_order(order), order, word);
}

namespace {

class WordParser {
 public:
  WordParser(const std::string& text, const std::vector<std::string>& names)
      : text_(text), names_(names) {}

  Word parse() {
    Word w = parse_sequence();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  Word parse_sequence() {
    Word out;
    for (;;) {
      skip_space();
      if (pos_ == text_.size() || text_[pos_] == ')') return out;
      Word f = parse_factor();
      out.insert(out.end(), f.begin(), f.end());
    }
  }

  Word parse_factor() {
    Word atom;
    if (text_[pos_] == '(') {
      ++pos_;
      atom = parse_sequence();
      if (pos_ == text_.size() || text_[pos_] != ')') fail("missing ')'");
      ++pos_;
    } else {
      atom = parse_name();
    }
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_space();
      return power(atom, parse_int());
    }
    return atom;
  }

  Word parse_name() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected a generator name");
    const std::string name = text_.substr(start, pos_ - start);
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) return {static_cast<int>(i) + 1};
    }
    if (name == "I" || name == "1") return {};
    throw UnboundName("unbound generator name '" + name + "'");
  }

  long parse_int() {
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string digits = text_.substr(start, pos_ - start);
    if (digits.empty() || digits == "-" || digits == "+") fail("expected an exponent");
    return std::stol(digits);
  }

  static Word power(const Word& w, long e) {
    Word base = w;
    if (e < 0) {
      std::reverse(base.begin(), base.end());
      for (int& x : base) x = -x;
      e = -e;
    }
    Word out;
    for (long i = 0; i < e; ++i) out.insert(out.end(), base.begin(), base.end());
    return out;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw WordSyntaxError("word '" + text_ + "' at " + std::to_string(pos_) + ": " + what);
  }

  const std::string& text_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(const std::string& text, const std::vector<std::string>& names) {
  return WordParser(text, names).parse();
}

std::string format_word(const Word& word, const std::vector<std::string>& names) {
  if (word.empty()) return "I";
  std::string out;
  for (std::size_t i = 0; i < word.size();) {
    std::size_t run = 1;
    while (i + run < word.size() && word[i + run] == word[i]) ++run;
    const int idx = word[i];
    const std::size_t g = static_cast<std::size_t>(idx < 0 ? -idx : idx);
    if (idx == 0 || g > names.size()) throw IndexOutOfRange("generator index out of range");
    if (!out.empty()) out += ' ';
    out += names[g - 1];
    if (idx < 0) {
      out += "^-" + std::to_string(run);
    } else if (run > 1) {
      out += "^" + std::to_string(run);
    }
    i += run;
  }
  return out;
}

std::vector<bool> check_relations(const std::map<std::string, GpElement>& gens,
                                  const std::vector<Relation>& relations) {
  std::vector<std::string> names;
  std::vector<GpElement> elems;
  for (const auto& [name, g] : gens) {
    names.push_back(name);
    elems.push_back(g);
  }
  std::vector<bool> out;
  for (const auto& [lhs, rhs] : relations) {
    const GpElement l = word_eval(parse_word(lhs, names), elems);
    const GpElement r = word_eval(parse_word(rhs, names), elems);
    out.push_back(l.matrix == r.matrix);
  }
  return out;
}

CayleyTable::CayleyTable(const FiniteMatrixGroup& group)
    : n_(group.order()), cells_(n_ * n_), inverse_(n_) {
  const auto moves = signed_generators(group.generators());
  auto slot = [&](int via) {
    const std::size_t g = static_cast<std::size_t>(via < 0 ? -via : via) - 1;
    return 2 * g + (via < 0 ? 1 : 0);
  };

  // right[s][i] = index of e_i * gen(s)
  std::vector<std::vector<std::uint32_t>> right(moves.size(), std::vector<std::uint32_t>(n_));
  for (std::size_t s = 0; s < moves.size(); ++s) {
    for (std::size_t i = 0; i < n_; ++i) {
      const auto idx = group.index_of(
          (group[i].matrix * moves[s].matrix).matrix().key(group.scalar_order()));
      if (!idx) throw std::logic_error("group is not closed under multiplication");
      right[s][i] = static_cast<std::uint32_t>(*idx);
    }
  }

  const auto& steps = group.steps();
  for (std::size_t i = 0; i < n_; ++i) cells_[i * n_] = static_cast<std::uint32_t>(i);
  for (std::size_t j = 1; j < n_; ++j) {
    const auto& [parent, via] = steps[j];
    const auto& r = right[slot(via)];
    for (std::size_t i = 0; i < n_; ++i) cells_[i * n_ + j] = cells_[r[i] * n_ + parent];
  }
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (cells_[i * n_ + j] == 0) {
        inverse_[i] = static_cast<std::uint32_t>(j);
        break;
      }
    }
  }
}

std::vector<std::vector<std::size_t>> conjugacy_classes(const FiniteMatrixGroup& group) {
  const CayleyTable table(group);
  const std::size_t n = table.size();
  std::vector<char> done(n, 0);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t x = 0; x < n; ++x) {
    if (done[x]) continue;
    std::set<std::size_t> orbit;
    for (std::size_t g = 0; g < n; ++g) orbit.insert(table.at(table.at(g, x), table.inverse(g)));
    for (std::size_t y : orbit) done[y] = 1;
    classes.emplace_back(orbit.begin(), orbit.end());
  }
  return classes;
}

std::optional<Isomorphism> find_isomorphism(const FiniteMatrixGroup& source,
                                            const FiniteMatrixGroup& target) {
  if (source.order() != target.order()) return std::nullopt;
  const std::size_t n = source.order();
  const CayleyTable ts(source);
  const CayleyTable tt(target);

  auto profile = [](const FiniteMatrixGroup& g, const CayleyTable& t) {
    const auto orders = element_orders(t);
    std::vector<std::pair<std::size_t, std::size_t>> out(t.size());
    for (const auto& cls : conjugacy_classes(g)) {
      for (std::size_t x : cls) out[x] = {orders[x], cls.size()};
    }
    return out;
  };
  const auto ps = profile(source, ts);
  const auto pt = profile(target, tt);

  const auto& gens = source.generators();
  std::vector<std::vector<std::size_t>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const std::size_t src = *source.index_of(gens[k].key);
    // Try the identical matrix first so a group maps to itself by the identity.
    const auto same = target.index_of(gens[k].matrix);
    if (same && pt[*same] == ps[src]) candidates[k].push_back(*same);
    for (std::size_t y = 0; y < n; ++y) {
      if (pt[y] == ps[src] && (!same || y != *same)) candidates[k].push_back(y);
    }
  }

  std::vector<std::size_t> images(gens.size());
  std::vector<std::size_t> phi(n);
  std::vector<char> seen(n);

  auto extends = [&]() {
    std::fill(seen.begin(), seen.end(), 0);
    phi[0] = 0;
    seen[0] = 1;
    const auto& steps = source.steps();
    for (std::size_t j = 1; j < n; ++j) {
      const int via = steps[j].via;
      const std::size_t g = images[static_cast<std::size_t>(via < 0 ? -via : via) - 1];
      const std::size_t img = via < 0 ? tt.inverse(g) : g;
      phi[j] = tt.at(img, phi[steps[j].parent]);
      if (seen[phi[j]]) return false;
      seen[phi[j]] = 1;
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (phi[ts.at(x, y)] != tt.at(phi[x], phi[y])) return false;
      }
    }
    return true;
  };

  std::function<bool(std::size_t)> search = [&](std::size_t k) {
    if (k == gens.size()) return extends();
    for (std::size_t y : candidates[k]) {
      images[k] = y;
      if (search(k + 1)) return true;
    }
    return false;
  };
  if (!search(0)) return std::nullopt;

  Isomorphism iso;
  for (std::size_t y : images) iso.generator_images.push_back(target[y]);
  iso.element_map = phi;
  return iso;
}

bool same_element_set(const FiniteMatrixGroup& a, const FiniteMatrixGroup& b) {
  if (a.order() != b.order() || a.dim() != b.dim()) return false;
  const int order = std::lcm(a.scalar_order(), b.scalar_order());
  std::set<std::string> ka, kb;
  for (const auto& e : a.elements()) ka.insert(e.matrix.matrix().key(order));
  for (const auto& e : b.elements()) kb.insert(e.matrix.matrix().key(order));
  return ka == kb;
}

}  // namespace su3braid
