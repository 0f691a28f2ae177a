#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "su3braid/braidrep.hpp"
#include "su3braid/matgroup.hpp"
#include "su3braid/recoupling.hpp"
#include "su3braid/serialize.hpp"
#include "su3braid/su3families.hpp"
#include "su3braid/verification.hpp"

using namespace su3braid;

namespace {

void print_cyclo(const std::string& label, const Cyclo& x) {
  std::cout << label << " = " << describe(x) << "\n";
  std::cout << cyclo_to_json(x).dump() << "\n";
}

void print_matrix(const std::string& label, const Matrix& m) {
  std::cout << label << " (" << m.dim() << "x" << m.dim() << ")\n";
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) {
      std::cout << "  [" << i << "," << j << "] " << describe(m(i, j)) << "\n";
    }
  }
}

int run_verify(const std::string& json_path) {
  const VerificationReport report = run_theorem1_verification();
  std::cout << report.to_text();
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw std::runtime_error("cannot open '" + json_path + "'");
    out << report.to_json().dump(2) << "\n";
  }
  return report.overall ? 0 : 1;
}

// "num/den" -> e^{i pi num/den}
Cyclo phase_from_text(const std::string& text) {
  const Rational frac = parse_rational(text);
  const long den = frac.get_den().get_si();
  const long num = frac.get_num().get_si();
  return root_of_unity(static_cast<int>(2 * den), num);
}

int run_rep(int r, int charge, const std::string& phase_text, const std::string& json_path) {
  const FusionBasis basis = fusion_basis(theory(r), charge);
  UnitaryMatrix odd = sigma_odd(basis);
  UnitaryMatrix mid = sigma_mid(basis);
  if (!phase_text.empty()) {
    const Cyclo phase = phase_from_text(phase_text);
    odd = su3_normalize(odd, phase);
    mid = su3_normalize(mid, phase);
  }
  std::cout << "basis labels:";
  for (int a : basis.labels) std::cout << " " << a;
  std::cout << "\n";
  print_matrix("g1 = g3", odd.matrix());
  print_matrix("g2", mid.matrix());
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw std::runtime_error("cannot open '" + json_path + "'");
    out << json{{"labels", basis.labels},
                {"g1", matrix_to_json(odd.matrix())},
                {"g2", matrix_to_json(mid.matrix())}}
               .dump(1)
        << "\n";
  }
  return 0;
}

struct Source {
  std::vector<UnitaryMatrix> gens;
  std::vector<std::string> names;
};

Source source_from(const std::vector<std::string>& from) {
  auto ints = [&](std::size_t count) {
    if (from.size() != count + 1) {
      throw CLI::ValidationError("--from " + from[0] + " expects " + std::to_string(count) +
                                 " integers");
    }
    std::vector<int> out;
    for (std::size_t i = 1; i < from.size(); ++i) out.push_back(std::stoi(from[i]));
    return out;
  };
  if (from.empty()) throw CLI::ValidationError("--from needs a value");
  if (from[0] == "paper") {
    auto [g1, g2] = paper_generators();
    return {{g1, g2}, {"G1", "G2"}};
  }
  if (from[0] == "familyC") {
    const auto v = ints(3);
    return {c_generators({v[0], v[1], v[2]}), {"E", "F"}};
  }
  if (from[0] == "familyD") {
    const auto v = ints(6);
    return {d_generators({{v[0], v[1], v[2]}, v[3], v[4], v[5]}), {"E", "F", "D"}};
  }
  throw CLI::ValidationError("unknown --from source '" + from[0] + "'");
}

int run_group(const std::vector<std::string>& from, const std::string& elements_path,
              const std::string& cayley_path, std::size_t cap) {
  const Source src = source_from(from);
  const FiniteMatrixGroup g = close(src.gens, cap);
  std::cout << "order " << g.order() << "\n";
  if (!elements_path.empty()) write_elements(g, src.names, elements_path);
  if (!cayley_path.empty()) write_cayley(g, cayley_path);
  return 0;
}

int run_query(const std::string& kind, const std::vector<int>& args, int r) {
  const TheoryParams t = theory(r);
  auto need = [&](std::size_t n) {
    if (args.size() != n) {
      throw CLI::ValidationError(kind + " takes " + std::to_string(n) + " integer arguments");
    }
  };
  if (kind == "qint") {
    need(1);
    print_cyclo("[" + std::to_string(args[0]) + "]", quantum_int(t, args[0]));
  } else if (kind == "delta") {
    need(1);
    print_cyclo("Delta_" + std::to_string(args[0]), delta_n(t, args[0]));
  } else if (kind == "rvalue") {
    need(3);
    const Cyclo v = r_value(t, args[0], args[1], args[2]);
    print_cyclo("R", v);
    print_cyclo("conj(R)", conj(v));
  } else if (kind == "theta") {
    need(3);
    print_cyclo("theta", theta(t, args[0], args[1], args[2]));
  } else if (kind == "tet") {
    need(6);
    print_cyclo("T", tet(t, args[0], args[1], args[2], args[3], args[4], args[5]));
  } else if (kind == "sixj") {
    need(6);
    print_cyclo("6j", sixj(t, args[0], args[1], args[2], args[3], args[4], args[5]));
  } else {
    throw CLI::ValidationError("unknown query kind '" + kind + "'");
  }
  return 0;
}

int run_family(const std::string& series, const std::vector<int>& p) {
  std::vector<UnitaryMatrix> gens;
  std::vector<std::string> names;
  if (series == "C" && p.size() == 3) {
    gens = c_generators({p[0], p[1], p[2]});
    names = {"E", "F"};
  } else if (series == "D" && p.size() == 6) {
    gens = d_generators({{p[0], p[1], p[2]}, p[3], p[4], p[5]});
    names = {"E", "F", "D"};
  } else {
    throw CLI::ValidationError("usage: family C n a b | family D n a b d r s");
  }
  json out = json::object();
  for (std::size_t i = 0; i < gens.size(); ++i) out[names[i]] = matrix_to_json(gens[i].matrix());
  std::cout << out.dump(1) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Temperley-Lieb braid representation and SU(3) group verification"};
  app.require_subcommand(1);

  std::string json_path;
  auto* verify = app.add_subcommand("verify", "Run the ordered verification script");
  verify->add_option("--json", json_path, "Write the report as JSON");

  int rep_r = 6, rep_charge = 2;
  std::string phase, rep_json;
  auto* rep = app.add_subcommand("rep", "Braid generator matrices on the fusion basis");
  rep->add_option("--r", rep_r, "Level parameter r (level k = r - 2)")->required();
  rep->add_option("--charge", rep_charge, "Anyon charge c")->required();
  rep->add_option("--phase", phase, "Normalizing phase e^{i pi NUM/DEN}, given as NUM/DEN");
  rep->add_option("--json", rep_json, "Write the matrices as JSON");

  std::vector<std::string> from;
  std::string elements_path, cayley_path;
  std::size_t cap = kDefaultClosureCap;
  auto* group = app.add_subcommand("group", "Close a generator set and export it");
  group->add_option("--from", from, "paper | familyC n a b | familyD n a b d r s")
      ->required()
      ->expected(1, 7);
  group->add_option("--emit-elements", elements_path, "Element list (JSON)");
  group->add_option("--emit-cayley", cayley_path, "Cayley table (CSV)");
  group->add_option("--cap", cap, "Closure size limit");

  std::string kind;
  std::vector<int> qargs;
  int query_r = 6;
  auto* query = app.add_subcommand("query", "Evaluate one recoupling quantity");
  query->add_option("kind", kind, "theta | tet | sixj | rvalue | qint | delta")->required();
  query->add_option("args", qargs, "Integer arguments")->required();
  query->add_option("--r", query_r, "Level parameter r")->required();

  std::string series;
  std::vector<int> fparams;
  auto* family = app.add_subcommand("family", "Generators of C(n,a,b) or D(n,a,b;d,r,s)");
  family->add_option("series", series, "C or D")->required();
  family->add_option("params", fparams, "n a b [d r s]")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) return run_verify(json_path);
    if (*rep) return run_rep(rep_r, rep_charge, phase, rep_json);
    if (*group) return run_group(from, elements_path, cayley_path, cap);
    if (*query) return run_query(kind, qargs, query_r);
    if (*family) return run_family(series, fparams);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
