#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "leibniz/algebra.hpp"
#include "leibniz/derivation.hpp"
#include "leibniz/endomorphism.hpp"
#include "leibniz/error.hpp"
#include "leibniz/finmat.hpp"
#include "leibniz/serialize.hpp"
#include "leibniz/text.hpp"
#include "leibniz/verify.hpp"

namespace leibniz::cli {

namespace {

using nlohmann::json;

// Input could not be turned into values: exit 2 rather than 1.
struct UsageFailure {
  std::string message;
};

struct Options {
  std::string field = "Q";
  std::size_t window = 24;
  bool json = false;
  bool dump_matrix = false;
  std::uint64_t seed = 42;
  std::size_t cases = 200;
  std::string mu;
  std::string target;
  std::size_t k = 1;
  std::vector<std::string> operands;
};

class Runner {
 public:
  Runner(const Options& options, std::ostream& out) : opt_(options), out_(out) {}

  template <typename Fn>
  auto parse(Fn&& fn) {
    try {
      return fn();
    } catch (const Error& e) {
      throw UsageFailure{std::string(e.what())};
    }
  }

  Field field() {
    return parse([&] { return Field::parse(opt_.field); });
  }

  const std::string& operand(std::size_t i, std::string_view what) {
    if (i >= opt_.operands.size()) throw UsageFailure{"missing operand: " + std::string(what)};
    return opt_.operands[i];
  }

  void expect_operands(std::size_t n) {
    if (opt_.operands.size() != n) {
      throw UsageFailure{"expected " + std::to_string(n) + " operand(s), got " +
                         std::to_string(opt_.operands.size())};
    }
  }

  static bool is_derivation_text(std::string_view text) {
    const auto start = text.find_first_not_of(" \t");
    return start != std::string_view::npos && text.substr(start, 3) == "der";
  }

  Element element(std::size_t i) {
    const Field f = field();
    const auto& text = operand(i, "element");
    return parse([&] { return parse_element(f, text); });
  }
  Endo endo(const std::string& text) {
    const Field f = field();
    return parse([&] { return parse_endo(f, text); });
  }
  Derivation derivation(const std::string& text) {
    const Field f = field();
    return parse([&] { return parse_derivation(f, text); });
  }
  Scalar scalar(const std::string& text, std::string_view what) {
    if (text.empty()) throw UsageFailure{"missing --" + std::string(what)};
    const Field f = field();
    return parse([&] { return parse_scalar(f, text); });
  }

  // Prints one value, as text or as a JSON document.
  template <typename Value>
  void emit(const Value& v) {
    if (opt_.json) {
      out_ << to_json(v).dump() << "\n";
    } else {
      out_ << v.to_string() << "\n";
    }
  }

  void emit_json(const json& doc) { out_ << doc.dump() << "\n"; }

  template <typename Map>
  void emit_map(const Map& m) {
    if (opt_.json) {
      json doc = to_json(m);
      if (opt_.dump_matrix) doc["matrix"] = to_json(matrix_of(m, opt_.window));
      emit_json(doc);
      return;
    }
    out_ << m.to_string() << "\n";
    if (opt_.dump_matrix) out_ << matrix_of(m, opt_.window).dump();
  }

  int bracket_cmd() {
    expect_operands(2);
    const Element x = element(0);
    const Element y = element(1);
    emit(bracket(x, y));
    return 0;
  }

  int apply_cmd() {
    expect_operands(2);
    const auto& map_text = operand(0, "map");
    const Element x = element(1);
    if (is_derivation_text(map_text)) {
      emit(apply(derivation(map_text), x));
    } else {
      emit(apply(endo(map_text), x));
    }
    return 0;
  }

  int compose_cmd() {
    expect_operands(2);
    const Endo f = endo(operand(0, "endo"));
    const Endo g = endo(operand(1, "endo"));
    emit_map(compose(f, g));
    return 0;
  }

  int classify_cmd() {
    expect_operands(1);
    const Endo f = endo(operand(0, "endo"));
    const auto cls = classify(f);
    if (opt_.json) {
      emit_json(json{{"class", std::string(to_string(cls))}});
    } else {
      out_ << to_string(cls) << "\n";
    }
    return 0;
  }

  int factor_cmd() {
    expect_operands(1);
    const auto& text = operand(0, "map");
    if (is_derivation_text(text)) {
      const DerDecomposition d = decompose(derivation(text));
      if (opt_.json) {
        emit_json(json{{"ideal", to_json(d.ideal_part)}, {"diagonal", d.diagonal_part.to_string()}});
      } else {
        out_ << "ideal: " << d.ideal_part.to_string() << "\n"
             << "diagonal: " << d.diagonal_part.to_string() << "\n";
      }
      return 0;
    }
    const MonFactorization m = factorize(endo(text));
    if (opt_.json) {
      emit_json(json{{"unipotent", to_json(m.unipotent)}, {"diagonal", m.diagonal.to_string()}});
    } else {
      out_ << "unipotent: " << m.unipotent.to_string() << "\n"
           << "diagonal: " << m.diagonal.to_string() << "\n";
    }
    return 0;
  }

  int phi_cmd() {
    expect_operands(1);
    emit(phi(endo(operand(0, "endo"))));
    return 0;
  }

  int phi_inv_cmd() {
    expect_operands(1);
    const Field f = field();
    const auto& text = operand(0, "polynomial");
    const Polynomial p = parse([&] { return parse_polynomial(f, text); });
    emit_map(phi_inverse(p));
    return 0;
  }

  int conjugate_cmd() {
    expect_operands(1);
    const Endo u = endo(operand(0, "endo"));
    emit_map(conjugate_by_diagonal(u, scalar(opt_.mu, "mu")));
    return 0;
  }

  int der_bracket_cmd() {
    expect_operands(2);
    const Derivation f = derivation(operand(0, "der"));
    const Derivation g = derivation(operand(1, "der"));
    emit_map(lie_bracket(f, g));
    return 0;
  }

  int solve_commutator_cmd() {
    expect_operands(0);
    if (opt_.target.empty()) throw UsageFailure{"missing --target"};
    const Scalar mu = scalar(opt_.mu, "mu");
    const Derivation target = derivation(opt_.target);
    emit_map(solve_commutator(mu, target));
    return 0;
  }

  int centers_cmd() {
    expect_operands(0);
    const Centers c = centers_window(field(), opt_.window);
    if (opt_.json) {
      emit_json(json{{"window", opt_.window},
                     {"left", c.left.to_string()},
                     {"right", c.right.to_string()},
                     {"center", c.center.to_string()}});
    } else {
      out_ << "left: " << c.left.to_string() << "\n"
           << "right: " << c.right.to_string() << "\n"
           << "center: " << c.center.to_string() << "\n";
    }
    return 0;
  }

  int gamma_cmd() {
    expect_operands(0);
    if (opt_.k < 1) throw UsageFailure{"--k must be >= 1"};
    const WindowSubspace s = gamma_window(field(), opt_.k, opt_.window);
    if (opt_.json) {
      emit_json(json{{"k", opt_.k}, {"window", opt_.window}, {"subspace", s.to_string()}});
    } else {
      out_ << s.to_string() << "\n";
    }
    return 0;
  }

  int dump_matrix_cmd() {
    expect_operands(1);
    const auto& text = operand(0, "map");
    const FinMatrixWindow m =
        is_derivation_text(text) ? matrix_of(derivation(text), opt_.window) : matrix_of(endo(text), opt_.window);
    if (opt_.json) {
      emit_json(to_json(m));
    } else {
      out_ << m.dump();
    }
    return 0;
  }

  int verify_cmd() {
    expect_operands(0);
    VerifyOptions v;
    v.field = field();
    v.seed = opt_.seed;
    v.cases = opt_.cases;
    v.window = opt_.window;
    const auto results = run_verification(v);
    bool ok = true;
    for (const auto& r : results) ok = ok && r.ok();
    if (opt_.json) {
      json suites = json::array();
      for (const auto& r : results) {
        suites.push_back(json{{"criterion", r.criterion},
                              {"suite", r.name},
                              {"cases", r.cases},
                              {"passed", r.passed},
                              {"ok", r.ok()},
                              {"failures", r.failures}});
      }
      emit_json(json{{"field", v.field.name()},
                     {"seed", v.seed},
                     {"cases", v.cases},
                     {"window", v.window},
                     {"suites", suites},
                     {"ok", ok}});
    } else {
      out_ << format_report(v, results);
    }
    return ok ? 0 : 1;
  }

 private:
  const Options& opt_;
  std::ostream& out_;
};

void report_error(const Options& opt, std::ostream& out, std::ostream& err, const Error& e) {
  json doc{{"code", static_cast<int>(e.code())}, {"name", std::string(error_name(e.code()))},
           {"message", e.what()}};
  if (const auto* obstruction = dynamic_cast<const CharPObstruction*>(&e)) {
    doc["indices"] = obstruction->indices();
  }
  if (opt.json) {
    out << json{{"error", doc}}.dump() << "\n";
  } else {
    err << "error[" << static_cast<int>(e.code()) << " " << error_name(e.code()) << "]: " << e.what() << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the infinite-dimensional cyclic left Leibniz algebra", "leibniz"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--field", opt.field, "Ground field: Q or GF<p>, e.g. GF5")->capture_default_str();
  app.add_option("--window", opt.window, "Window size N for matrices, centers and gamma")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", opt.json, "Print machine-readable JSON instead of text");
  app.add_flag("--dump-matrix", opt.dump_matrix, "Also print the window matrix of a resulting map");

  struct Verb {
    const char* name;
    const char* help;
    const char* operands;
  };
  const std::vector<Verb> verbs = {
      {"bracket", "Bracket of two elements, e.g. bracket \"a1\" \"a1\"", "X Y"},
      {"apply", "Apply an endo or der to an element", "MAP X"},
      {"compose", "Composition f o g of two endomorphisms", "F G"},
      {"classify", "ZeroSquareIdeal, MonomorphismProper or Automorphism", "F"},
      {"factor", "Split an endo into unipotent o diagonal, or a der into ideal + diagonal", "MAP"},
      {"phi", "Polynomial image of a unipotent endomorphism", "U"},
      {"phi-inv", "Unipotent endomorphism of a polynomial with constant term 1", "P"},
      {"conjugate", "d^-1 o u o d for d = [mu] (needs --mu)", "U"},
      {"der-bracket", "Lie bracket [f, g] of two derivations", "F G"},
      {"solve-commutator", "Solve [[mu], theta] = target (needs --mu, --target)", ""},
      {"centers", "Left, right and two-sided centers inside the window", ""},
      {"gamma", "Lower central series term gamma_k inside the window (needs --k)", ""},
      {"verify", "Run every randomized property suite", ""},
      {"dump-matrix", "Print the window matrix of an endo or der", "MAP"},
  };
  for (const auto& verb : verbs) {
    CLI::App* sub = app.add_subcommand(verb.name, verb.help);
    if (verb.operands[0] != '\0') sub->add_option("operands", opt.operands, verb.operands);
  }
  app.get_subcommand("conjugate")->add_option("--mu", opt.mu, "Diagonal scalar mu");
  auto* solve = app.get_subcommand("solve-commutator");
  solve->add_option("--mu", opt.mu, "Diagonal scalar mu");
  solve->add_option("--target", opt.target, "Target derivation, e.g. \"der [0, 0, 3]\"");
  app.get_subcommand("gamma")->add_option("--k", opt.k, "Series index k >= 1")->capture_default_str();
  auto* verify = app.get_subcommand("verify");
  verify->add_option("--seed", opt.seed, "Random seed")->capture_default_str();
  verify->add_option("--cases", opt.cases, "Cases per suite")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  Runner runner(opt, out);
  try {
    if (verb == "bracket") return runner.bracket_cmd();
    if (verb == "apply") return runner.apply_cmd();
    if (verb == "compose") return runner.compose_cmd();
    if (verb == "classify") return runner.classify_cmd();
    if (verb == "factor") return runner.factor_cmd();
    if (verb == "phi") return runner.phi_cmd();
    if (verb == "phi-inv") return runner.phi_inv_cmd();
    if (verb == "conjugate") return runner.conjugate_cmd();
    if (verb == "der-bracket") return runner.der_bracket_cmd();
    if (verb == "solve-commutator") return runner.solve_commutator_cmd();
    if (verb == "centers") return runner.centers_cmd();
    if (verb == "gamma") return runner.gamma_cmd();
    if (verb == "verify") return runner.verify_cmd();
    if (verb == "dump-matrix") return runner.dump_matrix_cmd();
  } catch (const UsageFailure& u) {
    err << "usage error: " << u.message << "\n";
    return 2;
  } catch (const Error& e) {
    report_error(opt, out, err, e);
    return 1;
  }
  err << "usage error: unknown command " << verb << "\n";
  return 2;
}

}  // namespace leibniz::cli
