#include "su3braid/verification.hpp"

#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>

#include "su3braid/braidrep.hpp"
#include "su3braid/recoupling.hpp"
#include "su3braid/serialize.hpp"
#include "su3braid/su3families.hpp"

namespace su3braid {

namespace {

constexpr int kOrder = 72;

Cyclo q(long num, long den = 1) { return Cyclo(make_rational(num, den), kOrder); }
Cyclo zeta(int n, long k) { return embed(root_of_unity(n, k), kOrder); }

struct Outcome {
  bool passed = false;
  json witness;
};

class Context {
 public:
  explicit Context(const VerificationInputs& in)
      : order_(std::lcm(kOrder, std::lcm(in.g1.matrix().scalar_order(),
                                         in.g2.matrix().scalar_order()))),
        cap_(in.cap),
        gens_{make_element(in.g1.with_order(order_), order_, Word{1}),
              make_element(in.g2.with_order(order_), order_, Word{2})} {}

  const UnitaryMatrix& g1() const { return gens_[0].matrix; }
  const UnitaryMatrix& g2() const { return gens_[1].matrix; }
  std::size_t cap() const { return cap_; }

  // Word over G1, G2.
  UnitaryMatrix w(const std::string& text) const {
    return word_eval(parse_word(text, {"G1", "G2"}), gens_).matrix;
  }

  UnitaryMatrix F() const { return w("G1 G2 G1^-1 G1^-1"); }
  UnitaryMatrix A() const { return w("G1 G2^2 G1^-1"); }
  UnitaryMatrix B() const { return w("G1 G2^-2 G1"); }
  UnitaryMatrix T1() const { return w("G1 G2 G1"); }
  UnitaryMatrix T2() const { return w("G2 G1^9 G2^-1"); }
  UnitaryMatrix T3() const { return w("(G2 G1^9 G2^-1) (G2 G1^2) (G2 G1^9 G2^-1)"); }

  // Word over A, B, T1, T3.
  UnitaryMatrix nh(const std::string& text) const {
    if (named_.empty()) {
      named_ = {{"A", make_element(A(), order_)},
                {"B", make_element(B(), order_)},
                {"T1", make_element(T1(), order_)},
                {"T3", make_element(T3(), order_)}};
    }
    std::vector<std::string> names;
    std::vector<GpElement> elems;
    for (const auto& [name, g] : named_) {
      names.push_back(name);
      elems.push_back(g);
    }
    return word_eval(parse_word(text, names), elems).matrix;
  }
  const std::map<std::string, GpElement>& named() const {
    nh("I");
    return named_;
  }

  const FiniteMatrixGroup& group() {
    if (!group_) group_ = std::make_unique<FiniteMatrixGroup>(close({g1(), g2()}, cap_));
    return *group_;
  }
  const FiniteMatrixGroup& normal() {
    if (!normal_) {
      normal_ = std::make_unique<FiniteMatrixGroup>(
          subgroup(group(), {make_element(A(), order_), make_element(B(), order_)}));
    }
    return *normal_;
  }
  const FiniteMatrixGroup& complement() {
    if (!complement_) {
      complement_ = std::make_unique<FiniteMatrixGroup>(
          subgroup(group(), {make_element(T1(), order_), make_element(T3(), order_)}));
    }
    return *complement_;
  }
  const FiniteMatrixGroup& d_family() {
    if (!d_family_) {
      d_family_ = std::make_unique<FiniteMatrixGroup>(
          close(d_generators({{9, 1, 1}, 2, 1, 1}), cap_));
    }
    return *d_family_;
  }
  GpElement element(const UnitaryMatrix& m) const { return make_element(m, order_); }

 private:
  int order_;
  std::size_t cap_;
  std::vector<GpElement> gens_;
  mutable std::map<std::string, GpElement> named_;
  std::unique_ptr<FiniteMatrixGroup> group_, normal_, complement_, d_family_;
};

json mat(const UnitaryMatrix& m) { return matrix_to_json(m.matrix()).at("float_rows"); }

std::vector<Cyclo> poly_from_roots(const std::vector<Cyclo>& roots) {
  std::vector<Cyclo> c{Cyclo(1)};
  for (const auto& r : roots) {
    std::vector<Cyclo> next(c.size() + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  return c;
}

using CheckFn = std::function<Outcome(Context&)>;

struct CheckEntry {
  std::string id;
  std::string description;
  CheckFn run;
};

Outcome tl_deltas(Context&) {
  const TheoryParams t = theory(6);
  const std::vector<std::pair<int, Cyclo>> expected{
      {0, q(1)}, {1, sqrt3(kOrder)}, {2, q(2)}, {4, q(1)}, {5, q(0)}};
  Outcome out{true, json::object()};
  for (const auto& [n, value] : expected) {
    const Cyclo got = delta_n(t, n);
    out.witness["Delta_" + std::to_string(n)] = cyclo_to_json(got);
    out.passed = out.passed && got == value;
  }
  return out;
}

Outcome tl_rvalues(Context&) {
  const TheoryParams t = theory(6);
  const std::vector<std::pair<int, Cyclo>> expected{
      {0, zeta(3, 1)}, {2, -zeta(6, 1)}, {4, zeta(6, -1)}};
  Outcome out{true, json::object()};
  for (const auto& [a, value] : expected) {
    const Cyclo got = conj(r_value(t, a, 2, 2));
    out.witness["conj_R_" + std::to_string(a) + "^{2,2}"] = cyclo_to_json(got);
    out.passed = out.passed && got == value;
  }
  return out;
}

Outcome tl_tet_table(Context&) {
  const TheoryParams t = theory(6);
  const Cyclo s3 = sqrt3(kOrder);
  const std::vector<std::tuple<int, int, Cyclo>> table{
      {0, 0, q(2)},        {2, 0, q(2, 3) * s3}, {2, 2, q(0)},
      {4, 0, q(1)},        {4, 2, -q(1, 3) * s3}, {4, 4, q(1, 2)}};
  Outcome out{true, json::object()};
  for (const auto& [i, j, value] : table) {
    const Cyclo ij = tet(t, 2, 2, j, 2, 2, i);
    const Cyclo ji = tet(t, 2, 2, i, 2, 2, j);
    out.witness["T(" + std::to_string(i) + "," + std::to_string(j) + ")"] = cyclo_to_json(ij);
    out.passed = out.passed && ij == value && ji == value;
  }
  return out;
}

Outcome tl_theta_id(Context&) {
  const TheoryParams t = theory(6);
  Outcome out{true, json::object()};
  for (int i : {0, 2, 4}) {
    const Cyclo th = theta(t, 2, 2, i);
    out.witness["theta(2,2," + std::to_string(i) + ")"] = cyclo_to_json(th);
    out.passed = out.passed && th == tet(t, 2, 2, i, 2, 2, 0);
  }
  return out;
}

Outcome rep_g1(Context& c) {
  return {c.g1().matrix() == reference::g1(), {{"G1", mat(c.g1())}}};
}

Outcome rep_g2(Context& c) {
  return {c.g2().matrix() == reference::g2(), {{"G2", mat(c.g2())}}};
}

Outcome rep_braid(Context& c) { return {c.w("G1 G2 G1") == c.w("G2 G1 G2"), json::object()}; }

Outcome rep_squares(Context& c) {
  return {c.w("G1^2 G2^2") == c.w("G2^2 G1^2"), json::object()};
}

Outcome rep_order18(Context& c) {
  const long o1 = matrix_order(c.g1(), static_cast<long>(c.cap()));
  const long o2 = matrix_order(c.g2(), static_cast<long>(c.cap()));
  return {o1 == 18 && o2 == 18, {{"order_G1", o1}, {"order_G2", o2}}};
}

Outcome rep_charpoly(Context& c) {
  const auto p1 = c.g1().matrix().char_poly();
  const auto p2 = c.g2().matrix().char_poly();
  const std::vector<Cyclo> spectrum{zeta(18, 7), -zeta(18, 4), zeta(18, -2)};
  const Matrix& m = c.g1().matrix();
  bool diag = m.is_diagonal();
  std::multiset<std::string> got, want;
  for (int i = 0; i < m.dim(); ++i) got.insert(embed(m(i, i), kOrder).key());
  for (const auto& s : spectrum) want.insert(s.key());
  json coeffs = json::array();
  for (const auto& x : p1) coeffs.push_back(cyclo_to_json(x));
  return {p1 == p2 && diag && got == want && poly_from_roots(spectrum) == p2,
          {{"char_poly", coeffs}}};
}

Outcome grp_order(Context& c) {
  return {c.group().order() == 162, {{"order", c.group().order()}}};
}

Outcome grp_f_matrix(Context& c) {
  return {c.F().matrix() == reference::f_matrix(), {{"F", mat(c.F())}}};
}

Outcome grp_a_def(Context& c) {
  const UnitaryMatrix g2f = c.g2() * c.F();
  return {g2f * g2f == c.A(), {{"A", mat(c.A())}}};
}

Outcome grp_ab_orders(Context& c) {
  const long a = matrix_order(c.A(), 1000);
  const long b = matrix_order(c.B(), 1000);
  return {a == 9 && b == 3, {{"order_A", a}, {"order_B", b}}};
}

Outcome grp_ab_commute(Context& c) { return {c.A() * c.B() == c.B() * c.A(), json::object()}; }

Outcome grp_cyclic_intersect(Context& c) {
  const auto& g = c.group();
  const auto ca = subgroup(g, {c.element(c.A())});
  const auto cb = subgroup(g, {c.element(c.B())});
  const bool distinct = !(c.B() == c.nh("A^3")) && !(c.nh("B^2") == c.nh("A^3")) &&
                        !(c.B() == c.nh("A^6")) && !(c.nh("B^2") == c.nh("A^6"));
  const std::size_t n = intersect(ca, cb).order();
  return {n == 1 && distinct, {{"intersection_order", n}}};
}

Outcome grp_n_normal(Context& c) {
  return {is_normal(c.group(), c.normal()), {{"order_N", c.normal().order()}}};
}

Outcome grp_n_invariants(Context& c) {
  const auto inv = abelian_invariants(c.normal());
  return {inv == std::vector<std::size_t>{9, 3} && c.normal().order() == 27,
          {{"invariants", inv}, {"order_N", c.normal().order()}}};
}

Outcome grp_g1ag1(Context& c) {
  return {c.g1() * c.A() * c.g1().inverse() == c.w("G2^2"), json::object()};
}

Outcome grp_g2sq(Context& c) { return {c.w("G2^2") == c.nh("A^7 B^2"), json::object()}; }

Outcome grp_g2ag2(Context& c) {
  const UnitaryMatrix lhs = c.g2() * c.A() * c.g2().inverse();
  return {lhs == c.w("G1^2") && c.w("G1^2") == c.nh("A B"), json::object()};
}

Outcome grp_t1t2t3(Context& c) {
  const long o1 = matrix_order(c.T1(), 1000);
  const long o2 = matrix_order(c.T2(), 1000);
  const long o3 = matrix_order(c.w("G2 G1^2"), 1000);
  return {o1 == 2 && o2 == 2 && o3 == 2 && c.T3().matrix() == reference::t3(),
          {{"order_T1", o1}, {"order_T2", o2}, {"order_G2G1^2", o3}, {"T3", mat(c.T3())}}};
}

Outcome grp_h_s3(Context& c) {
  const auto& h = c.complement();
  std::set<std::string> order3;
  for (const auto& e : h.elements()) {
    if (element_order(e, 100) == 3) order3.insert(e.key);
  }
  const std::set<std::string> want{c.element(c.nh("T1 T3")).key, c.element(c.nh("T3 T1")).key};
  return {h.order() == 6 && !h.is_abelian() && order3 == want && want.size() == 2,
          {{"order_H", h.order()}, {"elements_of_order_3", order3.size()}}};
}

Outcome grp_h_matrices(Context& c) {
  const auto& h = c.complement();
  const std::vector<std::string> listed{"I", "T3", "T1", "T3 T1 T3", "T1 T3", "T3 T1"};
  std::set<std::string> from_words, in_group;
  for (const auto& w : listed) from_words.insert(c.element(c.nh(w)).key);
  for (const auto& e : h.elements()) in_group.insert(e.key);
  const auto ref = reference::h_nondiagonal();
  const std::vector<std::string> nondiag{"T1", "T3 T1 T3", "T1 T3", "T3 T1"};
  bool matches = true;
  json shown = json::array();
  for (std::size_t i = 0; i < nondiag.size(); ++i) {
    const UnitaryMatrix m = c.nh(nondiag[i]);
    shown.push_back(mat(m));
    matches = matches && m.matrix() == ref[i];
  }
  return {from_words == in_group && from_words.size() == 6 && matches, {{"nondiagonal", shown}}};
}

Outcome grp_hn_trivial(Context& c) {
  const std::size_t n = intersect(c.complement(), c.normal()).order();
  return {n == 1, {{"intersection_order", n}}};
}

Outcome grp_order3_not_in_list(Context& c) {
  const std::vector<std::string> listed{"A^3",     "A^6",     "A^3 B", "A^6 B",
                                        "A^3 B^2", "A^6 B^2", "B",     "B^2"};
  bool clear = true;
  for (const auto& x : {c.nh("T1 T3"), c.nh("T3 T1")}) {
    for (const auto& w : listed) clear = clear && !(x == c.nh(w));
  }
  return {clear, json::object()};
}

Outcome grp_g2sqg1_factor(Context& c) {
  const UnitaryMatrix x = c.w("G2^2 G1");
  const UnitaryMatrix i3 = UnitaryMatrix::identity(3, kOrder);
  bool ok = c.w("(G2 G1 G2)^2") == i3 && c.w("(G2 G1)^3") == i3 && c.w("(G1 G2)^3") == i3 &&
            x * x == i3 && !c.complement().contains(x);
  ok = ok && x == c.nh("A^3 B T3");
  const UnitaryMatrix n = x.inverse() * c.T3();
  ok = ok && n == c.nh("A^3 B") && matrix_order(n, 100) == 3;

  // Of the three involutions of H, only T3 yields an element of N.
  json tried = json::object();
  for (const std::string h : {"T1", "T3", "T3 T1 T3"}) {
    const UnitaryMatrix cand = x.inverse() * c.nh(h);
    const long o = matrix_order(cand, 100);
    const bool in_n = c.normal().contains(cand);
    tried[h] = {{"order", o}, {"in_N", in_n}};
    ok = ok && o == 3 && in_n == (h == "T3");
  }
  return {ok, {{"candidates", tried}}};
}

Outcome grp_g1sqg2_factor(Context& c) {
  const UnitaryMatrix x = c.w("G1^2 G2");
  const bool ok = matrix_order(x, 100) == 2 && !c.complement().contains(x) &&
                  x == c.nh("B^2 T3 T1 T3") && x.inverse() * c.nh("T3 T1 T3") == c.nh("B^2");
  return {ok, json::object()};
}

Outcome psi_check(Context& c, const UnitaryMatrix& g, const std::string& n_word,
                  const std::string& h_word) {
  const auto [n, h] = decompose(g, c.normal(), c.complement());
  return {n.matrix == c.nh(n_word) && h.matrix == c.nh(h_word),
          {{"N_part", mat(n.matrix)}, {"H_part", mat(h.matrix)}}};
}

Outcome grp_psi_g1(Context& c) { return psi_check(c, c.g1(), "A^5 B^2", "T3"); }
Outcome grp_psi_g2(Context& c) { return psi_check(c, c.g2(), "A^-1 B", "T3 T1 T3"); }

Outcome grp_semidirect(Context& c) {
  const auto r = semidirect_verify(c.group(), c.normal(), c.complement());
  std::set<std::pair<std::string, std::string>> pairs;
  for (const auto& e : c.group().elements()) {
    const auto [n, h] = decompose(e.matrix, c.normal(), c.complement());
    pairs.emplace(n.key, h.key);
  }
  return {r.all() && pairs.size() == c.group().order(),
          {{"normal", r.normal},
           {"trivial_intersection", r.trivial_intersection},
           {"order_product", r.order_product},
           {"product_bijective", r.product_bijective},
           {"distinct_factorizations", pairs.size()}}};
}

Outcome grp_presentation(Context& c) {
  const std::vector<Relation> relations{
      {"A^9", "I"},         {"B^3", "I"},          {"T1^2", "I"},
      {"T3^2", "I"},        {"(T1 T3)^3", "I"},    {"(T3 T1)^3", "I"},
      {"T1 A T1^-1", "A"},  {"T3 A T3^-1", "A^7 B^2"},
      {"T1 B T1^-1", "A^6 B^2"}, {"T3 B T3^-1", "A^3 B^2"}};
  const auto held = check_relations(c.named(), relations);
  json detail = json::object();
  bool all = held.size() == relations.size();
  for (std::size_t i = 0; i < held.size(); ++i) {
    detail[relations[i].first + " = " + relations[i].second] = static_cast<bool>(held[i]);
    all = all && held[i];
  }
  return {all, detail};
}

Outcome grp_d_family_order(Context& c) {
  return {c.d_family().order() == 162, {{"order", c.d_family().order()}}};
}

Outcome grp_iso(Context& c) {
  const auto& g = c.group();
  const auto& d = c.d_family();
  const auto iso = find_isomorphism(g, d);
  if (!iso) return {false, {{"found", false}}};

  // Re-check the returned bijection against freshly built tables.
  const CayleyTable tg(g), td(d);
  const auto& phi = iso->element_map;
  std::set<std::size_t> image(phi.begin(), phi.end());
  bool hom = image.size() == g.order();
  for (std::size_t x = 0; hom && x < g.order(); ++x) {
    for (std::size_t y = 0; y < g.order(); ++y) {
      if (phi[tg.at(x, y)] != td.at(phi[x], phi[y])) {
        hom = false;
        break;
      }
    }
  }
  json images = json::array();
  for (const auto& e : iso->generator_images) {
    images.push_back(e.word ? format_word(*e.word, {"E", "F", "D"}) : "");
  }
  return {hom,
          {{"found", true},
           {"generator_images", images},
           {"same_element_set", same_element_set(g, d)}}};
}

const std::vector<CheckEntry>& registry() {
  static const std::vector<CheckEntry> checks{
      {"TL-DELTAS", "Delta_0 = Delta_4 = 1, Delta_2 = 2, Delta_1 = sqrt3, Delta_5 = 0 at r = 6",
       tl_deltas},
      {"TL-RVALUES", "conj R_a^{2,2} = e^{2i pi/3}, -e^{i pi/3}, e^{-i pi/3} for a = 0, 2, 4",
       tl_rvalues},
      {"TL-TET-TABLE", "T[2 2 j; 2 2 i] table of six values, symmetric in i and j", tl_tet_table},
      {"TL-THETA-ID", "theta(2,2,i) = T[2 2 i; 2 2 0] for i in {0,2,4}", tl_theta_id},
      {"REP-G1", "constructed G1 equals e^{i pi/9} diag(2 tbar^2, 2 t^2, -2 tbar^2)", rep_g1},
      {"REP-G2", "constructed G2 equals e^{i pi/9} [[t^2,t,-t^2],[t,0,t],[-t^2,t,t^2]]", rep_g2},
      {"REP-BRAID", "G1 G2 G1 = G2 G1 G2", rep_braid},
      {"REP-SQUARES-COMMUTE", "G1^2 G2^2 = G2^2 G1^2", rep_squares},
      {"REP-ORDER18", "G1 and G2 have order 18", rep_order18},
      {"REP-CHARPOLY",
       "char polys of G1 and G2 coincide; spectrum e^{7i pi/9}, -e^{4i pi/9}, e^{-2i pi/9}",
       rep_charpoly},
      {"GRP-ORDER-162", "|<G1, G2>| = 162", grp_order},
      {"GRP-F-MATRIX", "G1 G2 G1^-2 equals the explicit matrix F", grp_f_matrix},
      {"GRP-A-DEF", "(G2 F)^2 = G1 G2^2 G1^-1 = A", grp_a_def},
      {"GRP-AB-ORDERS", "|A| = 9 and |B| = 3", grp_ab_orders},
      {"GRP-AB-COMMUTE", "A B = B A", grp_ab_commute},
      {"GRP-CYCLIC-INTERSECT", "<A> and <B> intersect trivially", grp_cyclic_intersect},
      {"GRP-N-NORMAL", "N = <A, B> is normal in G", grp_n_normal},
      {"GRP-N-INVARIANTS", "N is Z9 x Z3 of order 27", grp_n_invariants},
      {"GRP-G1AG1-G2SQ", "G1 A G1^-1 = G2^2", grp_g1ag1},
      {"GRP-G2SQ-A7B2", "G2^2 = A^7 B^2", grp_g2sq},
      {"GRP-G2AG2-AB", "G2 A G2^-1 = G1^2 = A B", grp_g2ag2},
      {"GRP-T1T2T3", "T1, T2, G2 G1^2 have order 2 and T3 = diag(-1,-1,1)", grp_t1t2t3},
      {"GRP-H-S3", "H = <T1, T3> is non-abelian of order 6 with order-3 elements T1T3, T3T1",
       grp_h_s3},
      {"GRP-H-MATRICES", "H is the six listed elements; four non-diagonal matrices match",
       grp_h_matrices},
      {"GRP-HN-TRIVIAL", "H and N intersect trivially", grp_hn_trivial},
      {"GRP-ORDER3-NOT-IN-LIST", "T1T3 and T3T1 are none of the eight listed order-3 elements of N",
       grp_order3_not_in_list},
      {"GRP-G2SQG1-FACTOR", "G2^2 G1 is an involution equal to A^3 B T3", grp_g2sqg1_factor},
      {"GRP-G1SQG2-FACTOR", "G1^2 G2 is an involution equal to B^2 T3 T1 T3", grp_g1sqg2_factor},
      {"GRP-PSI-G1", "G1 factors as (A^5 B^2) T3", grp_psi_g1},
      {"GRP-PSI-G2", "G2 factors as (A^-1 B) (T3 T1 T3)", grp_psi_g2},
      {"GRP-SEMIDIRECT", "G = N x| H: normal, trivial intersection, |N||H| = |G|, N H = G",
       grp_semidirect},
      {"GRP-PRESENTATION", "all ten relations of the presentation on A, B, T1, T3 hold",
       grp_presentation},
      {"GRP-D-FAMILY-ORDER", "D(9,1,1;2,1,1) has order 162", grp_d_family_order},
      {"GRP-ISO-D91211", "G is isomorphic to D(9,1,1;2,1,1), checked on the full Cayley table",
       grp_iso},
  };
  return checks;
}

}  // namespace

const CheckResult* VerificationReport::find(const std::string& id) const {
  for (const auto& c : checks) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

json VerificationReport::to_json() const {
  json list = json::array();
  for (const auto& c : checks) {
    json entry{{"id", c.id}, {"description", c.description}, {"passed", c.passed}};
    entry["witness"] = c.witness ? *c.witness : json(nullptr);
    list.push_back(std::move(entry));
  }
  return {{"checks", list}, {"overall", overall}};
}

VerificationReport VerificationReport::from_json(const json& j) {
  VerificationReport r;
  for (const auto& c : j.at("checks")) {
    CheckResult cr{c.at("id").get<std::string>(), c.at("description").get<std::string>(),
                   c.at("passed").get<bool>(), std::nullopt};
    if (c.contains("witness") && !c.at("witness").is_null()) cr.witness = c.at("witness");
    r.checks.push_back(std::move(cr));
  }
  r.overall = j.at("overall").get<bool>();
  return r;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.passed ? "[PASS] " : "[FAIL] ") << c.id << "  " << c.description << "\n";
    if (!c.passed && c.witness && c.witness->contains("error")) {
      os << "       error: " << c.witness->at("error").get<std::string>() << "\n";
    }
  }
  os << (overall ? "OVERALL: PASS" : "OVERALL: FAIL") << " (" << checks.size() << " checks)\n";
  return os.str();
}

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& c : registry()) out.push_back(c.id);
    return out;
  }();
  return ids;
}

VerificationInputs VerificationInputs::defaults() {
  auto [g1, g2] = paper_generators();
  return {std::move(g1), std::move(g2), kDefaultClosureCap};
}

VerificationReport run_theorem1_verification() {
  return run_theorem1_verification(VerificationInputs::defaults());
}

VerificationReport run_theorem1_verification(const VerificationInputs& inputs) {
  Context ctx(inputs);
  VerificationReport report;
  report.overall = true;
  for (const auto& entry : registry()) {
    CheckResult result{entry.id, entry.description, false, std::nullopt};
    try {
      Outcome o = entry.run(ctx);
      result.passed = o.passed;
      if (!o.witness.empty()) result.witness = std::move(o.witness);
    } catch (const std::exception& e) {
      result.witness = json{{"error", e.what()}};
    }
    report.overall = report.overall && result.passed;
    report.checks.push_back(std::move(result));
  }
  return report;
}

namespace reference {

Cyclo t_value() { return sqrt2(kOrder) * q(1, 2) * zeta(3, 1); }

Matrix g1() {
  const Cyclo t = t_value();
  const Cyclo tb = conj(t);
  return zeta(18, 1) * Matrix::diagonal({q(2) * tb * tb, q(2) * t * t, -q(2) * tb * tb});
}

Matrix g2() {
  const Cyclo t = t_value();
  const Cyclo t2 = t * t;
  return zeta(18, 1) * Matrix{{t2, t, -t2}, {t, q(0), t}, {-t2, t, t2}};
}

Matrix f_matrix() {
  const Cyclo i = zeta(4, 1);
  const Cyclo w = q(-1) + i * sqrt3(kOrder);  // -1 + i sqrt3
  const Cyclo a = w * q(1, 4);
  const Cyclo b = sqrt2(kOrder) * q(1, 4) * w;
  const Cyclo c = -w * q(1, 4);  // (1 - i sqrt3) / 4
  return Matrix{{a, b, c}, {b, q(0), b}, {a, -b, c}};
}

Matrix t3() { return Matrix::diagonal({q(-1), q(-1), q(1)}); }

std::array<Matrix, 4> h_nondiagonal() {
  const Cyclo h = q(1, 2);
  const Cyclo s = sqrt2(kOrder) * q(1, 2);  // 1/sqrt2
  const Cyclo z = q(0);
  return {Matrix{{-h, -s, -h}, {-s, z, s}, {-h, s, -h}},
          Matrix{{-h, -s, h}, {-s, z, -s}, {h, -s, -h}},
          Matrix{{h, s, -h}, {s, z, s}, {h, -s, -h}},
          Matrix{{h, s, h}, {s, z, -s}, {-h, s, -h}}};
}

}  // namespace reference

}  // namespace su3braid
