#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "legendra/acceptance.hpp"
#include "legendra/builtins.hpp"
#include "legendra/dsl.hpp"
#include "legendra/error.hpp"
#include "legendra/invariants.hpp"
#include "legendra/moves.hpp"
#include "legendra/search.hpp"
#include "legendra/trigform.hpp"

namespace {

using legendra::Error;
using legendra::ErrorKind;
using json = nlohmann::ordered_json;

constexpr int kExitNotFound = 1;
constexpr int kExitValidation = 2;
constexpr int kExitExhausted = 3;
constexpr int kExitUsage = 64;

struct Options {
  std::uint64_t seed = 42;
  int depth = 12;
  std::optional<std::size_t> max_nodes;
  std::string format = "text";
};

bool structured(const Options& o) { return o.format == "structured"; }

legendra::SearchLimits limits(const Options& o) {
  legendra::SearchLimits lim;
  lim.depth = o.depth;
  if (o.max_nodes) lim.max_nodes = lim.fallback_nodes = *o.max_nodes;
  return lim;
}

// `builtin:<spec>` names an embedded diagram, `-` reads standard input.
legendra::FrontDiagram load(const std::string& source) {
  if (source.rfind("builtin:", 0) == 0) {
    return legendra::builtin(legendra::parse_builtin_spec(source.substr(8)));
  }
  std::stringstream buf;
  if (source == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(source);
    if (!in) throw Error(ErrorKind::SyntaxError, "cannot read '" + source + "'");
    buf << in.rdbuf();
  }
  return legendra::parse(buf.str());
}

std::string sign_text(int sign) { return sign > 0 ? "+" : sign < 0 ? "-" : "none"; }

std::string join(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

json certificate_json(const legendra::Certificate& cert) {
  json out = json::array();
  for (const auto& m : cert.moves) out.push_back(legendra::move_spec(m));
  return out;
}

int cmd_invariants(const Options& o, const std::string& file) {
  const auto r = legendra::invariants(load(file));
  if (structured(o)) {
    json j;
    j["writhe"] = r.writhe;
    j["tb"] = r.tb ? json(*r.tb) : json(nullptr);
    j["rot"] = r.rot;
    j["winding"] = r.winding;
    j["cusps_up"] = r.cusps_up;
    j["cusps_down"] = r.cusps_down;
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << "writhe=" << r.writhe << "\n"
            << "tb=" << (r.tb ? std::to_string(*r.tb) : "undefined") << "\n"
            << "rot=" << r.rot << "\n"
            << "winding=" << join(r.winding) << "\n"
            << "cusps_up=" << r.cusps_up << "\n"
            << "cusps_down=" << r.cusps_down << "\n";
  return 0;
}

int cmd_apply(const Options& o, const std::string& spec, const std::string& file) {
  const auto d = load(file);
  const auto out = legendra::apply(d, legendra::parse_move_spec(spec, d));
  if (structured(o)) {
    std::cout << json{{"move", spec}, {"diagram", legendra::print(out)}}.dump() << "\n";
  } else {
    std::cout << legendra::print(out);
  }
  return 0;
}

int cmd_normalize(const Options& o, const std::string& file) {
  const auto nf = legendra::normalize(load(file), limits(o));
  if (structured(o)) {
    std::cout << json{{"sign", sign_text(nf.sign)}, {"n", nf.n}, {"certificate", certificate_json(nf.certificate)}}
                     .dump()
              << "\n";
    return 0;
  }
  std::cout << "sign=" << sign_text(nf.sign) << " n=" << nf.n << "\n";
  for (const auto& m : nf.certificate.moves) std::cout << legendra::move_spec(m) << "\n";
  return 0;
}

int cmd_equiv(const Options& o, const std::string& a, const std::string& b) {
  const auto r = legendra::equiv_search(load(a), load(b), limits(o));
  if (structured(o)) {
    json j{{"found", r.found}, {"nodes", r.nodes}};
    if (r.found) {
      j["certificate"] = certificate_json(r.certificate);
    } else {
      j["reason"] = std::string(legendra::to_string(r.reason));
      j["detail"] = r.detail;
    }
    std::cout << j.dump() << "\n";
  } else if (r.found) {
    std::cout << "found=true moves=" << r.certificate.moves.size() << " nodes=" << r.nodes << "\n";
    for (const auto& m : r.certificate.moves) std::cout << legendra::move_spec(m) << "\n";
  } else {
    std::cout << "found=false reason=" << legendra::to_string(r.reason) << " nodes=" << r.nodes << "\n";
    if (!r.detail.empty()) std::cout << "detail=" << r.detail << "\n";
  }
  return r.found ? 0 : kExitNotFound;
}

int cmd_verify_contact(const Options& o, std::size_t samples, double tol) {
  std::vector<legendra::Check> checks = legendra::verify_identities();
  const auto pos = legendra::verify_contact_positivity(samples, o.seed, tol);
  std::ostringstream detail;
  detail << "samples=" << pos.samples << " min=" << pos.min_value;
  checks.push_back({"alpha^dalpha > 0", pos.pass, detail.str()});
  bool all = true;
  json arr = json::array();
  for (const auto& c : checks) {
    all = all && c.pass;
    if (structured(o)) {
      arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    } else {
      std::cout << c.name << ": " << (c.pass ? "PASS" : "FAIL") << "\n";
    }
  }
  if (structured(o)) std::cout << json{{"pass", all}, {"checks", arr}}.dump() << "\n";
  return all ? 0 : kExitNotFound;
}

int cmd_builtin(const Options& o, const std::string& name, const std::optional<int>& k) {
  legendra::BuiltinSpec spec = legendra::parse_builtin_spec(name);
  if (k) {
    if (!legendra::is_parameterized(spec.name)) {
      throw Error(ErrorKind::UnknownBuiltin, "'" + spec.name + "' takes no parameter");
    }
    spec.k = *k;
  } else if (legendra::is_parameterized(spec.name) && name.find('(') == std::string::npos) {
    throw Error(ErrorKind::UnknownBuiltin, "'" + spec.name + "' needs a parameter");
  }
  const std::string text = legendra::print(legendra::builtin(spec));
  if (structured(o)) {
    std::cout << json{{"name", legendra::to_string(spec)}, {"diagram", text}}.dump() << "\n";
  } else {
    std::cout << text;
  }
  return 0;
}

int cmd_corpus_check(const Options& o) {
  const auto results = legendra::run_acceptance(o.seed);
  bool all = true;
  json arr = json::array();
  for (const auto& r : results) {
    all = all && r.pass;
    if (structured(o)) {
      arr.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"seconds", r.seconds}, {"detail", r.detail}});
    } else {
      std::cout << "criterion " << r.id << " " << (r.pass ? "PASS" : "FAIL") << " " << r.title << " ("
                << r.detail << ", " << r.seconds << "s)\n";
    }
  }
  if (structured(o)) std::cout << json{{"pass", all}, {"criteria", arr}}.dump() << "\n";
  return all ? 0 : kExitNotFound;
}

int report(const Options& o, const Error& e) {
  const int code = e.kind() == ErrorKind::SearchExhausted ? kExitExhausted : kExitValidation;
  if (structured(o)) {
    json j{{"error", std::string(legendra::to_string(e.kind()))}, {"message", e.what()}};
    if (e.line() > 0) {
      j["line"] = e.line();
      j["column"] = e.column();
    }
    std::cout << j.dump() << "\n";
  } else {
    std::cerr << "error: " << e.what() << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Legendrian fronts in #(S1 x S2): invariants, moves, search and contact-form checks"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--seed", opt.seed, "seed for randomized commands");
  app.add_option("--depth", opt.depth, "search depth")->check(CLI::NonNegativeNumber);
  app.add_option("--max-nodes", opt.max_nodes, "node budget of equiv and of the normalize fallback");
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "structured"}));

  std::function<int()> run;
  std::string a, b;

  auto* inv = app.add_subcommand("invariants", "print the invariants of a diagram");
  inv->add_option("file", a, "diagram file, '-' or builtin:<name>")->required();
  inv->callback([&] { run = [&] { return cmd_invariants(opt, a); }; });

  auto* ap = app.add_subcommand("apply", "apply one move and print the result");
  ap->add_option("move", a, "move spec, e.g. s+@0.1 or rc^2@h1")->required();
  ap->add_option("file", b, "diagram file")->required();
  ap->callback([&] { run = [&] { return cmd_apply(opt, a, b); }; });

  auto* nf = app.add_subcommand("normalize", "reduce a once-over knot to a stabilized K0");
  nf->add_option("file", a, "diagram file")->required();
  nf->callback([&] { run = [&] { return cmd_normalize(opt, a); }; });

  auto* eq = app.add_subcommand("equiv", "search for an isotopy certificate");
  eq->add_option("a", a, "first diagram")->required();
  eq->add_option("b", b, "second diagram")->required();
  eq->callback([&] { run = [&] { return cmd_equiv(opt, a, b); }; });

  std::size_t samples = 10'000;
  double tol = 1e-9;
  auto* vc = app.add_subcommand("verify-contact", "check the contact form identities");
  vc->add_option("--samples", samples, "positivity samples");
  vc->add_option("--tol", tol, "positivity tolerance");
  vc->callback([&] { run = [&] { return cmd_verify_contact(opt, samples, tol); }; });

  std::optional<int> k;
  auto* bi = app.add_subcommand("builtin", "print a builtin diagram");
  bi->add_option("name", a, "unknot, K0, shark_left, shark_right, L, rcK0")->required();
  bi->add_option("k", k, "parameter of L and rcK0");
  bi->callback([&] { run = [&] { return cmd_builtin(opt, a, k); }; });

  auto* cc = app.add_subcommand("corpus-check", "run the acceptance suite");
  cc->callback([&] { run = [&] { return cmd_corpus_check(opt); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    return run();
  } catch (const Error& e) {
    return report(opt, e);
  }
}
