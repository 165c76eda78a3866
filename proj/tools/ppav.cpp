// Command-line front end: every subcommand reads/writes the shared JSON
// formats and emits a single report object on stdout (or --out FILE).
// Exit codes: 0 success, 1 failed verification-style check, 2 bad input.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ppav/serialize.hpp"

namespace {

using ppav::json;

struct OutputOptions {
  std::string out_file;
  bool pretty = false;
};

void add_output_flags(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--out", opts.out_file, "write the report to FILE instead of stdout");
  cmd->add_flag("--pretty", opts.pretty, "indent the JSON output");
}

void emit(const json& report, const OutputOptions& opts) {
  if (!opts.out_file.empty()) {
    ppav::write_json_file(opts.out_file, report, opts.pretty);
    return;
  }
  std::cout << (opts.pretty ? report.dump(2) : report.dump()) << "\n";
}

ppav::IntegerMatrix load_integer_matrix(const std::string& path) {
  json j = ppav::load_json_file(path);
  if (j.is_object() && j.contains("matrix")) return ppav::integer_matrix_from_json(j["matrix"]);
  return ppav::integer_matrix_from_json(j);
}

ppav::SiegelPoint load_siegel(const std::string& path) {
  json j = ppav::load_json_file(path);
  if (j.is_object() && j.contains("Z")) return ppav::siegel_from_json(j);
  return ppav::SiegelPoint::from_matrix(ppav::gaussian_matrix_from_json(j));
}

ppav::LevelStructure load_level(const std::string& path, const ppav::Integer& n) {
  json j = ppav::load_json_file(path);
  if (j.is_object() && j.contains("n")) {
    ppav::LevelStructure l = ppav::level_from_json(j);
    if (l.n() != n) throw ppav::PreconditionViolated("level file has a different modulus");
    return l;
  }
  ppav::IntegerMatrix m = j.is_object() && j.contains("matrix")
                              ? ppav::integer_matrix_from_json(j["matrix"])
                              : ppav::integer_matrix_from_json(j);
  return ppav::LevelStructure::from_matrix(m, n);
}

std::size_t closure_cap_from_env() {
  const char* env = std::getenv("PPAV_MAX_CLOSURE");
  if (env == nullptr) return 1u << 20;
  return static_cast<std::size_t>(std::stoull(env));
}

int run_classify(const std::string& file, const OutputOptions& opts) {
  ppav::IntegerMatrix m = load_integer_matrix(file);
  ppav::InvolutionType t = ppav::classify_involution(m);
  ppav::IntegerMatrix fixed = ppav::integer_kernel(m - ppav::IntegerMatrix::identity(m.rows()));
  ppav::Integer index = ppav::Integer(1) << (2 * t.x);
  ppav::Integer trace = m.trace();
  json report{{"command", "classify"},
              {"inputs", json{{"file", file}}},
              {"result", json{{"symplectic", true},
                              {"involution", true},
                              {"type", ppav::to_json(t)},
                              {"trace", ppav::to_string(trace)},
                              {"fixed_rank", fixed.cols()},
                              {"index", ppav::to_string(index)}}}};
  emit(report, opts);
  return 0;
}

int run_normal_form(int x, int y, int z, std::optional<std::uint64_t> seed,
                    std::size_t word_length, const OutputOptions& opts) {
  ppav::InvolutionType t(x, y, z);
  ppav::SymplecticInvolution r = ppav::reiner_normal_form(t);
  json inputs{{"type", ppav::to_json(t)}};
  ppav::IntegerMatrix out = r.matrix();
  if (seed) {
    ppav::IntegerMatrix e = ppav::random_symplectic(r.g(), *seed, word_length);
    out = ppav::unimodular_inverse(e) * out * e;
    inputs["seed"] = *seed;
    inputs["word_length"] = word_length;
  }
  json report{{"command", "normal-form"},
              {"inputs", inputs},
              {"result", ppav::to_json(ppav::SymplecticInvolution::from_matrix(out))}};
  emit(report, opts);
  return 0;
}

int run_act(const std::string& rfile, const std::string& zfile, const OutputOptions& opts) {
  ppav::IntegerMatrix r = load_integer_matrix(rfile);
  ppav::SiegelPoint z = load_siegel(zfile);
  ppav::SiegelPoint image = ppav::act(r, z);
  json report{{"command", "act"},
              {"inputs", json{{"R", rfile}, {"Z", zfile}}},
              {"result", ppav::to_json(image)}};
  emit(report, opts);
  return 0;
}

int run_fixed(const std::string& rfile, const std::string& zfile, const OutputOptions& opts) {
  ppav::IntegerMatrix r = load_integer_matrix(rfile);
  ppav::SiegelPoint z = load_siegel(zfile);
  bool fixed = ppav::is_fixed(r, z);
  json report{{"command", "fixed"},
              {"inputs", json{{"R", rfile}, {"Z", zfile}}},
              {"result", json{{"fixed", fixed}}},
              {"verified", fixed}};
  emit(report, opts);
  return fixed ? 0 : 1;
}

int run_witness(const std::string& family, int g, int x, const OutputOptions& opts) {
  json result;
  if (family == "F0") {
    std::vector<ppav::GaussianRational> a(static_cast<std::size_t>(g),
                                          ppav::GaussianRational::i());
    result = json{{"family", "F0"}, {"witness", ppav::to_json(ppav::family_f0_witness(g, a))}};
  } else if (family == "Fx") {
    ppav::SiegelPoint w = ppav::family_fx_witness(g, x, ppav::FxParameters::defaults(g, x));
    result = json{{"family", "Fx"}, {"x", x}, {"witness", ppav::to_json(w)}};
  } else if (family == "Ftilde") {
    ppav::SiegelPoint w = ppav::family_ftilde_witness(g, ppav::PairedBlockParameters::defaults(g));
    result = json{{"family", "Ftilde"}, {"witness", ppav::to_json(w)}};
  } else if (family == "master") {
    ppav::MasterWitness mw = ppav::odd_g_master_witness(g, ppav::MasterParameters::defaults(g));
    json invs = json::array();
    std::vector<ppav::IntegerMatrix> gens;
    for (const ppav::SymplecticInvolution& r : mw.involutions) {
      invs.push_back(ppav::to_json(r));
      gens.push_back(r.matrix());
    }
    json closure;
    try {
      closure = ppav::group_closure(gens, closure_cap_from_env()).size();
    } catch (const ppav::CapExceeded& e) {
      closure = json{{"cap_exceeded", true}, {"partial_size", e.partial_size}};
    }
    result = json{{"family", "master"},
                  {"witness", ppav::to_json(mw.witness)},
                  {"involutions", invs},
                  {"closure_order", closure}};
  } else {
    throw ppav::PreconditionViolated("unknown family: " + family);
  }
  json report{{"command", "witness"},
              {"inputs", json{{"family", family}, {"g", g}, {"x", x}}},
              {"result", result}};
  emit(report, opts);
  return 0;
}

int run_strata(int g, std::optional<int> x, std::optional<int> y, std::optional<int> z,
               const OutputOptions& opts) {
  json result;
  if (x || y || z) {
    if (!(x && y && z)) throw ppav::PreconditionViolated("give all of --x, --y, --z or none");
    ppav::InvolutionType t(*x, *y, *z);
    if (t.g() != g) throw ppav::PreconditionViolated("2x + y + z must equal g");
    ppav::StratumParameters p = ppav::StratumParameters::defaults(t);
    result = json{{"type", ppav::to_json(t)},
                  {"admissible", t.is_admissible()},
                  {"dimension", ppav::component_dimension(t)},
                  {"free_parameters", p.free_parameter_count()},
                  {"default_point", ppav::to_json(ppav::stratum_build(p))}};
  } else {
    json triples = json::array();
    for (const ppav::InvolutionType& t : ppav::admissible_triples(g))
      triples.push_back(
          json{{"type", ppav::to_json(t)}, {"dimension", ppav::component_dimension(t)}});
    result = json{{"triples", triples}};
    if (g >= 3) {
      // class counting is part of the g >= 3 theory; triples exist from g = 2
      json classes = json::array();
      for (const ppav::ComponentClass& c : ppav::dual_classes(g))
        classes.push_back(json{{"type", ppav::to_json(c.representative)},
                               {"dual", ppav::to_json(c.dual)},
                               {"dimension", c.dimension}});
      result["classes"] = classes;
      result["class_count"] = ppav::component_count_bound(g);
    }
  }
  json report{{"command", "strata"}, {"inputs", json{{"g", g}}}, {"result", result}};
  emit(report, opts);
  return 0;
}

int run_certify(int g, bool max_entry_check, const OutputOptions& opts) {
  ppav::ConnectivityCertificate cert = ppav::connectivity_certificate(g);
  json result = ppav::to_json(cert);
  if (max_entry_check) {
    ppav::Integer max_entry = 0;
    auto update = [&max_entry](const ppav::Integer& value) {
      ppav::Integer a = abs(value);
      if (a > max_entry) max_entry = a;
    };
    for (const ppav::CertificateEdge& e : cert.edges) {
      for (std::size_t i = 0; i < e.inv_a.matrix().rows(); ++i)
        for (std::size_t j = 0; j < e.inv_a.matrix().cols(); ++j) {
          update(e.inv_a.matrix()(i, j));
          update(e.inv_b.matrix()(i, j));
        }
      for (std::size_t i = 0; i < e.witness.g(); ++i)
        for (std::size_t j = 0; j < e.witness.g(); ++j) {
          const ppav::GaussianRational& v = e.witness.matrix()(i, j);
          update(v.re.get_num());
          update(v.re.get_den());
          update(v.im.get_num());
          update(v.im.get_den());
        }
    }
    result["max_entry"] = ppav::to_string(max_entry);
  }
  json report{{"command", "certify"},
              {"inputs", json{{"g", g}}},
              {"result", result},
              {"verified", cert.connected}};
  emit(report, opts);
  return cert.connected ? 0 : 1;
}

int run_level_reduce(const std::string& file, long mod, const OutputOptions& opts) {
  ppav::SymplecticInvolution r =
      ppav::SymplecticInvolution::from_matrix(load_integer_matrix(file));
  ppav::LevelStructure l = ppav::reduce_mod(r, mod);
  json report{{"command", "level reduce"},
              {"inputs", json{{"file", file}, {"mod", mod}}},
              {"result", ppav::to_json(l)}};
  emit(report, opts);
  return 0;
}

int run_level_conjugate(const std::string& afile, const std::string& bfile, long p,
                        const OutputOptions& opts) {
  ppav::LevelStructure a = load_level(afile, p);
  ppav::LevelStructure b = load_level(bfile, p);
  bool conjugate = ppav::conjugate_mod_p(a, b, p);
  json report{{"command", "level conjugate"},
              {"inputs", json{{"a", afile}, {"b", bfile}, {"p", p}}},
              {"result", json{{"conjugate", conjugate}}},
              {"verified", conjugate}};
  emit(report, opts);
  return conjugate ? 0 : 1;
}

int run_level_certificate(const std::string& efile, const std::string& afile,
                          const std::string& bfile, long mod, const OutputOptions& opts) {
  ppav::IntegerMatrix e = load_integer_matrix(efile);
  ppav::LevelStructure a = load_level(afile, mod);
  ppav::LevelStructure b = load_level(bfile, mod);
  bool valid = ppav::conjugacy_certificate_check(e, a, b, mod);
  json report{{"command", "level certificate"},
              {"inputs", json{{"E", efile}, {"a", afile}, {"b", bfile}, {"mod", mod}}},
              {"result", json{{"valid", valid}}},
              {"verified", valid}};
  emit(report, opts);
  return valid ? 0 : 1;
}

int run_level_conjugator(long p, const OutputOptions& opts) {
  ppav::IntegerMatrix e = ppav::g3_conjugator(p);
  json report{{"command", "level conjugator"},
              {"inputs", json{{"p", p}}},
              {"result", json{{"c", ppav::to_string(e(1, 0))}, {"matrix", ppav::to_json(e)}}}};
  emit(report, opts);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with integral symplectic involutions and period matrices"};
  app.require_subcommand(1);

  OutputOptions opts;

  std::string classify_file;
  CLI::App* classify = app.add_subcommand("classify", "classify an integral symplectic involution");
  classify->add_option("file", classify_file, "matrix or involution JSON file")->required();
  add_output_flags(classify, opts);

  int nf_x = 0, nf_y = 0, nf_z = 0;
  std::optional<std::uint64_t> nf_seed;
  std::size_t nf_word_length = 12;
  CLI::App* normal_form = app.add_subcommand("normal-form", "normal form of a type (x,y,z)");
  normal_form->add_option("--x", nf_x)->required();
  normal_form->add_option("--y", nf_y)->required();
  normal_form->add_option("--z", nf_z)->required();
  normal_form->add_option("--seed", nf_seed,
                          "conjugate by a deterministic random symplectic matrix");
  normal_form->add_option("--word-length", nf_word_length, "length of the conjugating word");
  add_output_flags(normal_form, opts);

  std::string act_r, act_z;
  CLI::App* act_cmd = app.add_subcommand("act", "apply (A+ZC)^-1(B+ZD) to a Siegel point");
  act_cmd->add_option("R", act_r, "symplectic matrix JSON file")->required();
  act_cmd->add_option("Z", act_z, "Siegel point JSON file")->required();
  add_output_flags(act_cmd, opts);

  std::string fixed_r, fixed_z;
  CLI::App* fixed_cmd = app.add_subcommand("fixed", "test whether R fixes Z");
  fixed_cmd->add_option("R", fixed_r)->required();
  fixed_cmd->add_option("Z", fixed_z)->required();
  add_output_flags(fixed_cmd, opts);

  std::string witness_family;
  int witness_g = 0, witness_x = 1;
  CLI::App* witness =
      app.add_subcommand("witness", "default witness of a family (F0, Fx, Ftilde, master)");
  witness->add_option("--family", witness_family)
      ->required()
      ->check(CLI::IsMember({"F0", "Fx", "Ftilde", "master"}));
  witness->add_option("--g", witness_g)->required();
  witness->add_option("--x", witness_x);
  add_output_flags(witness, opts);

  int strata_g = 0;
  std::optional<int> strata_x, strata_y, strata_z;
  CLI::App* strata = app.add_subcommand("strata", "enumerate components or describe one stratum");
  strata->add_option("--g", strata_g)->required();
  strata->add_option("--x", strata_x);
  strata->add_option("--y", strata_y);
  strata->add_option("--z", strata_z);
  add_output_flags(strata, opts);

  int certify_g = 0;
  bool max_entry_check = false;
  CLI::App* certify = app.add_subcommand("certify", "connectivity certificate for genus g");
  certify->add_option("--g", certify_g)->required();
  certify->add_flag("--max-entry-check", max_entry_check,
                    "report the largest entry appearing in the certificate");
  add_output_flags(certify, opts);

  CLI::App* level = app.add_subcommand("level", "n-level structure operations");
  level->require_subcommand(1);

  std::string lr_file;
  long lr_mod = 0;
  CLI::App* level_reduce = level->add_subcommand("reduce", "reduce an involution mod n");
  level_reduce->add_option("file", lr_file)->required();
  level_reduce->add_option("--mod", lr_mod)->required();
  add_output_flags(level_reduce, opts);

  std::string lc_a, lc_b;
  long lc_p = 0;
  CLI::App* level_conjugate =
      level->add_subcommand("conjugate", "decide conjugacy mod an odd prime");
  level_conjugate->add_option("a", lc_a)->required();
  level_conjugate->add_option("b", lc_b)->required();
  level_conjugate->add_option("--p", lc_p)->required();
  add_output_flags(level_conjugate, opts);

  std::string cert_e, cert_a, cert_b;
  long cert_mod = 0;
  CLI::App* level_certificate =
      level->add_subcommand("certificate", "check a conjugacy certificate mod n");
  level_certificate->add_option("E", cert_e)->required();
  level_certificate->add_option("a", cert_a)->required();
  level_certificate->add_option("b", cert_b)->required();
  level_certificate->add_option("--mod", cert_mod)->required();
  add_output_flags(level_certificate, opts);

  long conjugator_p = 0;
  CLI::App* level_conjugator =
      level->add_subcommand("conjugator", "genus-3 conjugator mod an odd prime");
  level_conjugator->add_option("--p", conjugator_p)->required();
  add_output_flags(level_conjugator, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*classify) return run_classify(classify_file, opts);
    if (*normal_form) return run_normal_form(nf_x, nf_y, nf_z, nf_seed, nf_word_length, opts);
    if (*act_cmd) return run_act(act_r, act_z, opts);
    if (*fixed_cmd) return run_fixed(fixed_r, fixed_z, opts);
    if (*witness) return run_witness(witness_family, witness_g, witness_x, opts);
    if (*strata) return run_strata(strata_g, strata_x, strata_y, strata_z, opts);
    if (*certify) return run_certify(certify_g, max_entry_check, opts);
    if (*level_reduce) return run_level_reduce(lr_file, lr_mod, opts);
    if (*level_conjugate) return run_level_conjugate(lc_a, lc_b, lc_p, opts);
    if (*level_certificate) return run_level_certificate(cert_e, cert_a, cert_b, cert_mod, opts);
    if (*level_conjugator) return run_level_conjugator(conjugator_p, opts);
  } catch (const ppav::VerificationFailed& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const ppav::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
