#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "rauzy/cover.hpp"
#include "rauzy/io.hpp"
#include "rauzy/suspension.hpp"

using namespace rauzy;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitResource = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw domain_error("cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_output(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << data;
}

int cmd_perm(const std::string& what, const std::string& text) {
  GP pi = GP::parse(text);
  if (what == "canon") {
    std::cout << pi.canonical_form().str() << "\n";
  } else if (what == "irreducible") {
    bool irr = is_irreducible(pi);
    std::cout << (irr ? "irreducible" : "reducible") << "\n";
  } else {  // info
    std::cout << "permutation: " << pi.str() << "\n";
    std::cout << "canonical:   " << pi.canonical_form().str() << "\n";
    std::cout << "alphabet:    " << pi.size_alphabet() << " letters, "
              << (pi.is_abelian() ? "abelian" : "quadratic") << "\n";
    std::cout << "letters:     ";
    for (int a = 0; a < pi.size_alphabet(); ++a) {
      LetterType t = pi.letter_type(a);
      std::cout << pi.name(a) << ":"
                << (t == LetterType::Translation ? "translation"
                    : t == LetterType::TopFlip   ? "top-flip"
                                                 : "bottom-flip")
                << (a + 1 < pi.size_alphabet() ? ", " : "\n");
    }
    bool irr = is_irreducible(pi);
    std::cout << "irreducible: " << (irr ? "yes" : "no") << "\n";
    if (irr) {
      SingularityData sd = singularity_data(pi);
      std::cout << "stratum:     " << sd.str() << " (genus " << sd.genus << ", rootings "
                << rooting_count(sd) << ")\n";
      std::cout << "components:  ";
      auto comps = classify_components(sd);
      if (comps.empty()) std::cout << "(empty stratum)";
      for (size_t i = 0; i < comps.size(); ++i)
        std::cout << (i ? ", " : "") << component_kind_str(comps[i].kind);
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int cmd_reproduce(long prime_budget) {
  bool all_valid = true, any_inconclusive = false;
  for (const SporadicComponent& sc : sporadic_components()) {
    IMat a1 = plus_matrix(sc.pi, [&] {
      RauzyWord w = sc.delta1;
      w.insert(w.end(), sc.delta1.begin(), sc.delta1.end());
      return w;
    }());
    IMat a2 = plus_matrix(sc.pi, [&] {
      RauzyWord w = sc.delta2;
      w.insert(w.end(), sc.delta2.begin(), sc.delta2.end());
      return w;
    }());
    IMat a = a1 * a2;
    ZPoly p = ZPoly(charpoly(a));
    bool match = p == sc.expected_charpoly;
    IrreducibilityWitness wit =
        check_strong_irreducibility(sc.chain_cycles, sc.omega, sc.twist_set);
    IntersectionForm f = intersection_form(sc.pi);
    DensityCertificate cert = prasad_rapinchuk(a, a1, f.gram_plus, wit, prime_budget);
    std::cout << sc.name << ": charpoly " << (match ? "matches" : "MISMATCH") << " ["
              << p.str() << "], certificate "
              << (cert.status == CheckStatus::Pass          ? "valid"
                  : cert.status == CheckStatus::Inconclusive ? "inconclusive"
                                                              : "INVALID")
              << " (" << cert.detail << ")\n";
    if (!match || cert.status == CheckStatus::Fail) all_valid = false;
    if (cert.status == CheckStatus::Inconclusive) any_inconclusive = true;
  }
  if (!all_valid) return kExitBadInput;
  if (any_inconclusive) return kExitInconclusive;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Rauzy-Veech induction toolkit"};
  app.require_subcommand(1);

  std::string perm_text, word_text, out_path, point_path, format = "json", piece_str = "plus";
  std::string component, a_path, b_path, omega_path, target_stratum, kind_str = "preserving";
  bool reduced = false, as_json = false;
  size_t max_vertices = 100000, steps = 10, max_len = 16;
  long samples = 100000, prime_budget = 10000;
  uint64_t seed = 1;
  unsigned chains = 1;

  auto* perm = app.add_subcommand("perm", "permutation utilities");
  perm->require_subcommand(1);
  for (const char* sub : {"info", "canon", "irreducible"}) {
    auto* s = perm->add_subcommand(sub);
    s->add_option("permutation", perm_text)->required();
  }

  auto* diagram = app.add_subcommand("diagram", "Rauzy diagrams");
  diagram->require_subcommand(1);
  auto* dbuild = diagram->add_subcommand("build", "build and cache a diagram");
  dbuild->add_option("permutation", perm_text)->required();
  dbuild->add_flag("--reduced", reduced);
  dbuild->add_option("--max-vertices", max_vertices);
  dbuild->add_option("-o,--out", out_path);
  auto* dexport = diagram->add_subcommand("export", "export a cached diagram");
  dexport->add_option("cache", point_path)->required();
  dexport->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));
  dexport->add_option("-o,--out", out_path);
  auto* dscc = diagram->add_subcommand("check-scc", "strong connectivity");
  dscc->add_option("permutation", perm_text)->required();
  dscc->add_flag("--reduced", reduced);
  dscc->add_option("--max-vertices", max_vertices);

  auto* flow_cmd = app.add_subcommand("flow", "parameter flow and coding");
  flow_cmd->require_subcommand(1);
  auto* fcode = flow_cmd->add_subcommand("code", "code a trajectory");
  fcode->add_option("permutation", perm_text)->required();
  fcode->add_option("--steps", steps);
  fcode->add_option("--point", point_path, "parameter point JSON file");
  auto* fnorm = flow_cmd->add_subcommand("normalize", "flow into the window");
  fnorm->add_option("point", point_path)->required();

  auto* cocycle = app.add_subcommand("cocycle", "cocycle matrices over words");
  auto* cword = cocycle->add_subcommand("word", "matrix of a word");
  cword->add_option("permutation", perm_text)->required();
  cword->add_option("--word", word_text)->required();
  cword->add_option("--piece", piece_str)
      ->check(CLI::IsMember({"full", "plus", "minus", "plus-raw", "minus-raw", "abelian"}));
  cword->add_option("-o,--out", out_path);

  auto* certify = app.add_subcommand("certify", "density certificates");
  certify->require_subcommand(1);
  auto* cpinch = certify->add_subcommand("pinching", "Galois-pinching check");
  cpinch->add_option("--matrix", a_path);
  cpinch->add_option("--component", component);
  cpinch->add_option("--prime-budget", prime_budget);
  auto* cdens = certify->add_subcommand("density", "full certificate");
  cdens->add_option("--component", component);
  cdens->add_option("--a", a_path);
  cdens->add_option("--b", b_path);
  cdens->add_option("--omega", omega_path);
  cdens->add_option("--prime-budget", prime_budget);
  cdens->add_option("-o,--out", out_path);
  auto* cirr = certify->add_subcommand("irreducibility", "strong-irreducibility witness");
  cirr->add_option("--component", component)->required();

  auto* extend_cmd = app.add_subcommand("extend", "simple extensions");
  auto* esearch = extend_cmd->add_subcommand("search", "enumerate extensions");
  esearch->add_option("--from", perm_text)->required();
  esearch->add_option("--target-stratum", target_stratum, "comma-separated orders");
  esearch->add_option("--kind", kind_str)->check(CLI::IsMember({"preserving", "changing"}));

  auto* lyap = app.add_subcommand("lyapunov", "spectrum estimation");
  lyap->add_option("--perm", perm_text)->required();
  lyap->add_option("--piece", piece_str)
      ->check(CLI::IsMember({"plus", "minus", "full-rv", "abelian-absolute"}));
  lyap->add_option("--samples", samples);
  lyap->add_option("--seed", seed);
  lyap->add_option("--chains", chains);
  lyap->add_flag("--json", as_json);

  auto* reproduce = app.add_subcommand("reproduce", "end-to-end reproductions");
  auto* rappb = reproduce->add_subcommand("appendix-b", "four sporadic component certificates");
  rappb->add_option("--prime-budget", prime_budget);

  CLI11_PARSE(app, argc, argv);

  try {
    if (perm->parsed()) {
      for (const char* sub : {"info", "canon", "irreducible"})
        if (perm->get_subcommand(sub)->parsed()) return cmd_perm(sub, perm_text);
    }
    if (dbuild->parsed()) {
      RauzyDiagram d = build_diagram(GP::parse(perm_text), reduced, max_vertices);
      write_output(out_path, diagram_to_cache(d));
      std::cerr << "vertices: " << d.size() << "\n";
      return kExitOk;
    }
    if (dexport->parsed()) {
      RauzyDiagram d = diagram_from_cache(read_file(point_path));
      write_output(out_path, format == "dot" ? d.dot() : diagram_to_cache(d));
      return kExitOk;
    }
    if (dscc->parsed()) {
      RauzyDiagram d = build_diagram(GP::parse(perm_text), reduced, max_vertices);
      bool scc = is_strongly_connected(d);
      std::cout << (scc ? "strongly connected" : "NOT strongly connected") << " ("
                << d.size() << " vertices)\n";
      return scc ? kExitOk : kExitBadInput;
    }
    if (fcode->parsed()) {
      GP pi = GP::parse(perm_text);
      ParameterPoint p = point_path.empty() ? interior_point(pi)
                                            : parameter_point_from_json(read_file(point_path));
      Trajectory t = code_trajectory(p, steps);
      std::cout << trajectory_to_json(t);
      return kExitOk;
    }
    if (fnorm->parsed()) {
      ParameterPoint p = parameter_point_from_json(read_file(point_path));
      std::cout << parameter_point_to_json(normalize_point(p));
      return kExitOk;
    }
    if (cword->parsed()) {
      GP pi = GP::parse(perm_text);
      RauzyWord w = parse_word(word_text);
      IMat m;
      std::string basis_note;
      if (piece_str == "full") m = word_matrix(pi, w);
      else if (piece_str == "plus-raw") m = plus_matrix_raw(pi, w);
      else if (piece_str == "minus-raw") m = minus_matrix_raw(pi, w);
      else if (piece_str == "plus") {
        m = plus_matrix(pi, w);
        basis_note = "deterministic cycle basis of the invariant piece at " + pi.str();
      } else if (piece_str == "minus") {
        m = minus_matrix(pi, w);
        basis_note = "deterministic cycle basis of the anti-invariant piece at " + pi.str();
      } else {
        m = abelian_absolute_matrix(pi, w);
        basis_note = "deterministic cycle basis of absolute homology at " + pi.str();
      }
      write_output(out_path, matrix_to_json(m, "cocycle/" + piece_str, basis_note));
      return kExitOk;
    }
    if (cpinch->parsed()) {
      IMat a;
      if (!component.empty()) {
        for (const SporadicComponent& sc : sporadic_components())
          if (sc.name == component) {
            RauzyWord w1 = sc.delta1;
            w1.insert(w1.end(), sc.delta1.begin(), sc.delta1.end());
            RauzyWord w2 = sc.delta2;
            w2.insert(w2.end(), sc.delta2.begin(), sc.delta2.end());
            a = plus_matrix(sc.pi, w1) * plus_matrix(sc.pi, w2);
          }
        if (a.rows() == 0) throw domain_error("unknown component: " + component);
      } else if (!a_path.empty()) {
        a = matrix_from_json(read_file(a_path));
      } else {
        throw domain_error("certify pinching needs --matrix or --component");
      }
      PinchingEvidence e = is_galois_pinching(a, prime_budget);
      std::cout << "status: "
                << (e.status == CheckStatus::Pass          ? "pinching"
                    : e.status == CheckStatus::Inconclusive ? "inconclusive"
                                                             : "not pinching")
                << "\ncharpoly: " << e.charpoly.str() << "\ndetail: " << e.detail << "\n";
      return e.status == CheckStatus::Pass          ? kExitOk
             : e.status == CheckStatus::Inconclusive ? kExitInconclusive
                                                      : kExitBadInput;
    }
    if (cdens->parsed()) {
      DensityCertificate cert;
      std::string name = component;
      if (!component.empty()) {
        bool found = false;
        for (const SporadicComponent& sc : sporadic_components()) {
          if (sc.name != component) continue;
          found = true;
          RauzyWord w1 = sc.delta1;
          w1.insert(w1.end(), sc.delta1.begin(), sc.delta1.end());
          RauzyWord w2 = sc.delta2;
          w2.insert(w2.end(), sc.delta2.begin(), sc.delta2.end());
          IMat a1 = plus_matrix(sc.pi, w1);
          IMat a = a1 * plus_matrix(sc.pi, w2);
          IrreducibilityWitness wit =
              check_strong_irreducibility(sc.chain_cycles, sc.omega, sc.twist_set);
          cert = prasad_rapinchuk(a, a1, intersection_form(sc.pi).gram_plus, wit, prime_budget);
        }
        if (!found) throw domain_error("unknown component: " + component);
      } else {
        if (a_path.empty() || b_path.empty() || omega_path.empty())
          throw domain_error("certify density needs --component or --a/--b/--omega");
        IMat a = matrix_from_json(read_file(a_path));
        IMat b = matrix_from_json(read_file(b_path));
        IMat omega = matrix_from_json(read_file(omega_path));
        IrreducibilityWitness wit;  // not derivable from matrices alone
        wit.ok = false;
        wit.failure = "no strong-irreducibility data supplied";
        cert = prasad_rapinchuk(a, b, omega, wit, prime_budget);
        name = "custom";
      }
      write_output(out_path, certificate_to_json(name, cert));
      return cert.status == CheckStatus::Pass          ? kExitOk
             : cert.status == CheckStatus::Inconclusive ? kExitInconclusive
                                                         : kExitBadInput;
    }
    if (cirr->parsed()) {
      for (const SporadicComponent& sc : sporadic_components()) {
        if (sc.name != component) continue;
        IrreducibilityWitness wit =
            check_strong_irreducibility(sc.chain_cycles, sc.omega, sc.twist_set);
        std::cout << (wit.ok ? "witness" : "failure(" + wit.failure + ")") << "\n";
        return wit.ok ? kExitOk : kExitBadInput;
      }
      throw domain_error("unknown component: " + component);
    }
    if (esearch->parsed()) {
      GP sigma = GP::parse(perm_text);
      ExtensionKind kind =
          kind_str == "changing" ? ExtensionKind::TypeChanging : ExtensionKind::TypePreserving;
      std::vector<long> target;
      if (!target_stratum.empty()) {
        std::string tok;
        for (char c : target_stratum + ",") {
          if (c == ',') {
            if (!tok.empty()) target.push_back(std::stol(tok));
            tok.clear();
          } else if (!isspace(static_cast<unsigned char>(c))) {
            tok += c;
          }
        }
        std::sort(target.begin(), target.end(), std::greater<long>());
      }
      size_t shown = 0;
      for (const ExtensionWitness& w : enumerate_extensions(sigma, kind)) {
        if (!target.empty()) {
          std::vector<long> got = w.tau_stratum.orders;
          if (got != target) continue;
        }
        std::cout << extension_to_json(w);
        ++shown;
      }
      std::cerr << shown << " extension(s)\n";
      return kExitOk;
    }
    if (lyap->parsed()) {
      GP pi = GP::parse(perm_text);
      Piece piece = piece_str == "minus"              ? Piece::Minus
                    : piece_str == "full-rv"          ? Piece::FullRV
                    : piece_str == "abelian-absolute" ? Piece::AbelianAbsolute
                                                      : Piece::Plus;
      SectionConfig cfg;
      cfg.samples = static_cast<size_t>(samples);
      cfg.seed = seed;
      cfg.chains = chains;
      SpectrumEstimate e = estimate_spectrum(pi, piece, cfg);
      if (as_json) {
        std::cout << spectrum_to_json(e);
      } else {
        std::cout << "exponents (per unit flow time):\n";
        for (size_t i = 0; i < e.exponents.size(); ++i)
          std::cout << "  lambda_" << i + 1 << " = " << e.exponents[i] << "  (+- "
                    << 2 * e.stderrs[i] << ")\n";
        std::cout << "samples: " << e.samples << ", ties resampled: " << e.tie_incidents
                  << "\n";
      }
      return kExitOk;
    }
    if (rappb->parsed()) return cmd_reproduce(prime_budget);
  } catch (const limit_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const domain_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
