#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "su3braid/matrix.hpp"

namespace su3braid {

// Signed 1-based generator indices; -i stands for the inverse of generator i.
using Word = std::vector<int>;

inline constexpr std::size_t kDefaultClosureCap = 100000;

struct GpElement {
  UnitaryMatrix matrix;
  std::string key;
  std::optional<Word> word;
};

// Element whose key is taken over Q(zeta_order).
GpElement make_element(const UnitaryMatrix& m, int order, std::optional<Word> word = std::nullopt);

/// A finite group of exact unitary matrices, closed once and then immutable.
///
/// Elements are kept in breadth-first order from the identity (layer by
/// layer, each layer sorted by key) and every element carries a shortest word
/// over the generators. All keys are taken over one scalar order, so key
/// equality is matrix equality.
class FiniteMatrixGroup {
 public:
  // Provenance of element j: elements[j] == gen(via) * elements[parent].
  struct Step {
    std::size_t parent = 0;
    int via = 0;  // signed generator index; 0 for the identity
  };

  const std::vector<GpElement>& generators() const { return generators_; }
  const std::vector<GpElement>& elements() const { return elements_; }
  const std::vector<Step>& steps() const { return steps_; }
  std::size_t order() const { return elements_.size(); }
  int dim() const { return dim_; }
  int scalar_order() const { return scalar_order_; }
  const GpElement& identity() const { return elements_.front(); }
  const GpElement& operator[](std::size_t i) const { return elements_[i]; }

  std::optional<std::size_t> index_of(const std::string& key) const;
  // Rekeys m over this group's scalar order before looking it up.
  std::optional<std::size_t> index_of(const UnitaryMatrix& m) const;
  bool contains(const UnitaryMatrix& m) const { return index_of(m).has_value(); }
  bool contains(const GpElement& g) const { return contains(g.matrix); }
  bool is_abelian() const;

 private:
  friend FiniteMatrixGroup close(std::span<const UnitaryMatrix> generators, std::size_t cap);

  int dim_ = 0;
  int scalar_order_ = 1;
  std::vector<GpElement> generators_;
  std::vector<GpElement> elements_;
  std::vector<Step> steps_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Breadth-first closure under left multiplication by the generators and their
// inverses. Throws GroupTooLarge once more than `cap` elements appear.
FiniteMatrixGroup close(std::span<const UnitaryMatrix> generators,
                        std::size_t cap = kDefaultClosureCap);
FiniteMatrixGroup close(std::initializer_list<UnitaryMatrix> generators,
                        std::size_t cap = kDefaultClosureCap);

std::size_t element_order(const GpElement& g, std::size_t cap = kDefaultClosureCap);

FiniteMatrixGroup subgroup(const FiniteMatrixGroup& group, std::span<const GpElement> gens);
FiniteMatrixGroup subgroup(const FiniteMatrixGroup& group, std::initializer_list<GpElement> gens);

bool is_normal(const FiniteMatrixGroup& group, const FiniteMatrixGroup& sub);
FiniteMatrixGroup intersect(const FiniteMatrixGroup& s1, const FiniteMatrixGroup& s2);

// Cyclic factor orders, largest first, with each factor dividing the previous.
std::vector<std::size_t> abelian_invariants(const FiniteMatrixGroup& group);

struct SemidirectReport {
  bool normal = false;
  bool trivial_intersection = false;
  bool order_product = false;
  bool product_bijective = false;

  bool all() const { return normal && trivial_intersection && order_product && product_bijective; }
};

SemidirectReport semidirect_verify(const FiniteMatrixGroup& group, const FiniteMatrixGroup& normal,
                                   const FiniteMatrixGroup& complement);

// The unique (n, h) with g == n * h, n in `normal`, h in `complement`.
std::pair<GpElement, GpElement> decompose(const UnitaryMatrix& g, const FiniteMatrixGroup& normal,
                                          const FiniteMatrixGroup& complement);

GpElement word_eval(const Word& word, std::span<const GpElement> gens);

// Words as text: space separated factors, each a name, "I", or a
// parenthesized word, optionally raised to an integer power ("(T1 T3)^3",
// "A^-1"). Names index into `names` (1-based in the resulting Word).
Word parse_word(const std::string& text, const std::vector<std::string>& names);
std::string format_word(const Word& word, const std::vector<std::string>& names);

using Relation = std::pair<std::string, std::string>;
// For each relation, whether both sides evaluate to the same matrix.
std::vector<bool> check_relations(const std::map<std::string, GpElement>& gens,
                                  const std::vector<Relation>& relations);

/// Multiplication table by element index: at(i, j) == index of e_i * e_j.
///
/// Built from the closure provenance: e_j = s * e_parent, so
/// e_i * e_j = (e_i * s) * e_parent and only |G| * 2 * #gens matrix products
/// are needed.
class CayleyTable {
 public:
  explicit CayleyTable(const FiniteMatrixGroup& group);

  std::size_t size() const { return n_; }
  std::uint32_t at(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }
  std::uint32_t inverse(std::size_t i) const { return inverse_[i]; }

 private:
  std::size_t n_;
  std::vector<std::uint32_t> cells_;
  std::vector<std::uint32_t> inverse_;
};

// Orbits under conjugation, as sorted index lists ordered by first element.
std::vector<std::vector<std::size_t>> conjugacy_classes(const FiniteMatrixGroup& group);

struct Isomorphism {
  // Images of the source group's generators, aligned with generators().
  std::vector<GpElement> generator_images;
  // element_map[i] = index in the target of the image of source element i.
  std::vector<std::size_t> element_map;
};

// Backtracking over generator images with matching (order, class size); each
// candidate is accepted only after checking the full Cayley table.
std::optional<Isomorphism> find_isomorphism(const FiniteMatrixGroup& source,
                                            const FiniteMatrixGroup& target);

// True when both groups hold the same matrices after embedding into a common
// scalar order.
bool same_element_set(const FiniteMatrixGroup& a, const FiniteMatrixGroup& b);

}  // namespace su3braid
