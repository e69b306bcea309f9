#pragma once

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "liesc/liesc.hpp"
#include "liesc/io.hpp"

namespace liesc::cli {

using json = io::json;

inline constexpr const char* kToolVersion = "liesc 1.0.0";

enum ExitCode : int { kSuccess = 0, kPropertyFails = 1, kInvalidInput = 2 };

inline std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return "sha256:" + hex.str();
}

/// {tool_version, input_digest, command, result, timing}; everything but timing is deterministic.
inline json envelope(const std::string& command, const std::string& digest, json result, double elapsed_ms) {
  return json{{"tool_version", kToolVersion},
              {"input_digest", digest},
              {"command", command},
              {"result", std::move(result)},
              {"timing", json{{"elapsed_ms", elapsed_ms}}}};
}

inline json error_record(const Error& e) {
  json rec{{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
  if (const auto* jv = dynamic_cast<const JacobiViolation*>(&e)) {
    rec["triple"] = json::array({jv->triple()[0], jv->triple()[1], jv->triple()[2]});
  }
  return json{{"error", std::move(rec)}};
}

namespace detail {

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct Loaded {
  LieAlgebra algebra;
  std::string digest;
};

inline Loaded load_with_digest(const std::string& path) {
  const std::string text = io::read_file(path);
  return {io::parse_algebra(text), sha256_hex(text)};
}

inline void emit_algebra(const LieAlgebra& L, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << io::algebra_to_json(L).dump(2) << "\n";
  } else {
    io::save(L, path);
  }
}

inline std::string file_stem_for(std::size_t index, const std::string& id) {
  std::string stem;
  for (char c : id) stem += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  std::ostringstream name;
  name << std::setw(3) << std::setfill('0') << index << "_" << stem << ".json";
  return name.str();
}

inline std::string join_dims(const std::vector<std::size_t>& dims) {
  std::string s;
  for (std::size_t i = 0; i < dims.size(); ++i) s += (i ? " " : "") + std::to_string(dims[i]);
  return s;
}

inline void print_witnesses(std::ostream& out, const std::vector<NamedSubspace>& ws, const LieAlgebra& L) {
  for (const auto& [name, s] : ws) out << "  " << name << " = " << io::format_subspace(s, &L) << "\n";
}

struct SuiteOutcome {
  json result;
  bool passed = true;
};

/// Lemma checks, load/save round-trips and decomposition round-trips over one catalog.
inline SuiteOutcome run_suite(Domain domain, std::size_t max_dim, std::uint64_t seed) {
  SuiteOutcome outcome;
  std::map<LemmaId, LemmaTally> totals;
  for (auto id : kAllLemmas) totals[id] = {};
  std::map<std::string, std::size_t> histogram{{"one", 0}, {"two", 0}};
  json lemma_failures = json::array();
  json decomposition_failures = json::array();
  std::size_t pairs = 0, roundtrip_failures = 0, frattinian_nonabelian = 0, verified = 0;

  const auto entries = catalog(domain, max_dim, seed);
  for (const auto& entry : entries) {
    const LieAlgebra& L = entry.algebra;
    if (!(io::algebra_from_json(io::algebra_to_json(L)) == L)) ++roundtrip_failures;

    const LemmaSuiteReport report = lemma_suite(L, entry.id);
    pairs += report.maximal_count;
    for (const auto& [id, t] : report.tally()) {
      totals[id].passed += t.passed;
      totals[id].failed += t.failed;
    }
    if (!report.passed()) {
      LemmaSuiteReport failed_only = report;
      failed_only.checks.erase(std::remove_if(failed_only.checks.begin(), failed_only.checks.end(),
                                              [](const LemmaCheck& c) { return c.pass; }),
                               failed_only.checks.end());
      for (auto& rec : io::lemma_checks_to_json(failed_only, L)) lemma_failures.push_back(std::move(rec));
    }

    if (!report.frattinian || is_abelian(L)) continue;
    ++frattinian_nonabelian;
    try {
      const DecompositionCertificate cert = decompose(L);
      if (verify_certificate(L, cert).passed()) {
        ++verified;
        ++histogram[to_string(cert.kind)];
      } else {
        decomposition_failures.push_back(json{{"algebra_id", entry.id}, {"message", "verification failed"}});
      }
    } catch (const InternalAssertionFailure& e) {
      decomposition_failures.push_back(json{{"algebra_id", entry.id},
                                            {"message", e.what()},
                                            {"witness_subspaces", io::named_subspaces_to_json(e.witnesses(), &L)}});
    } catch (const Error& e) {
      decomposition_failures.push_back(json{{"algebra_id", entry.id}, {"message", e.what()}});
    }
  }

  json per_lemma = json::object();
  std::size_t failed_checks = 0;
  for (const auto& [id, t] : totals) {
    per_lemma[to_string(id)] = json{{"passed", t.passed}, {"failed", t.failed}};
    failed_checks += t.failed;
  }
  outcome.passed = failed_checks == 0 && roundtrip_failures == 0 && decomposition_failures.empty();
  outcome.result = json{{"field", domain.name()},
                        {"max_dim", max_dim},
                        {"seed", seed},
                        {"algebras", entries.size()},
                        {"pairs", pairs},
                        {"lemmas", std::move(per_lemma)},
                        {"lemma_failures", std::move(lemma_failures)},
                        {"roundtrip_failures", roundtrip_failures},
                        {"frattinian_nonabelian", frattinian_nonabelian},
                        {"decompositions_verified", verified},
                        {"case_histogram", histogram},
                        {"decomposition_failures", std::move(decomposition_failures)},
                        {"passed", outcome.passed}};
  return outcome;
}

inline json certificate_result(const LieAlgebra& L, const DecompositionCertificate& cert, const ObligationReport& r) {
  json out = io::certificate_to_json(cert, &L);
  out["verified"] = r.passed();
  out["obligations"] = io::obligations_to_json(r, &L);
  return out;
}

}  // namespace detail

/// Runs one command line (without the program name). Exit codes: 0 holds, 1 fails with witness, 2 invalid input.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computation with nilpotent Lie algebras over F_p and Q", "liesc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  int exit_code = kSuccess;
  bool as_json = false;
  auto add_json_flag = [&](CLI::App* sub) { sub->add_flag("--json", as_json, "Print the JSON report envelope"); };

  // gen
  auto* gen = app.add_subcommand("gen", "Write algebra files");
  gen->require_subcommand(1);
  std::string field = "F2";
  std::string output;
  std::size_t n = 1, m = 1, dim = 3, max_dim = 4, count = 1;
  std::uint64_t seed = kDefaultCatalogSeed;
  std::string left_path, right_path;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--field", field, "F<p> or Q")->capture_default_str();
    sub->add_option("-o,--output", output, "Output path ('-' or omitted for stdout)");
  };
  auto* gen_abelian = gen->add_subcommand("abelian", "Abelian algebra A(n)");
  gen_abelian->add_option("--n", n, "Dimension")->required();
  add_common(gen_abelian);
  auto* gen_heis = gen->add_subcommand("heisenberg", "Heisenberg algebra H(m), dimension 2m+1");
  gen_heis->add_option("--m", m, "Rank m >= 1")->required();
  add_common(gen_heis);
  auto* gen_fil = gen->add_subcommand("filiform", "Standard filiform algebra of dimension n");
  gen_fil->add_option("--dim,--n", dim, "Dimension n >= 3")->required();
  add_common(gen_fil);
  auto* gen_cp = gen->add_subcommand("central-product", "Central product identifying leading centre vectors");
  gen_cp->add_option("--left", left_path, "Left factor file")->required();
  gen_cp->add_option("--right", right_path, "Right factor file")->required();
  gen_cp->add_option("--count", count, "Number of centre basis vectors to identify")->capture_default_str();
  gen_cp->add_option("-o,--output", output, "Output path ('-' or omitted for stdout)");
  auto* gen_cat = gen->add_subcommand("catalog", "Write every catalog entry into a directory");
  gen_cat->add_option("--max-dim,--dim", max_dim, "Largest dimension")->capture_default_str();
  gen_cat->add_option("--seed", seed, "Seed for the random entries")->capture_default_str();
  gen_cat->add_option("--field", field, "F<p>")->capture_default_str();
  gen_cat->add_option("-o,--output", output, "Output directory")->required();

  // info / maximal / check / decompose
  std::string path, cert_path, report_path;
  auto* info = app.add_subcommand("info", "Dimension, series and centre");
  info->add_option("path", path)->required();
  add_json_flag(info);
  auto* maximal = app.add_subcommand("maximal", "Count maximal subalgebras");
  maximal->add_option("path", path)->required();
  bool list = false;
  maximal->add_flag("--list", list, "Print canonical bases");
  add_json_flag(maximal);
  auto* check = app.add_subcommand("check", "Check a property");
  check->require_subcommand(1);
  auto* check_fratt = check->add_subcommand("frattinian", "Z(M) != Z(L) for every maximal M");
  check_fratt->add_option("path", path)->required();
  add_json_flag(check_fratt);
  auto* decomp = app.add_subcommand("decompose", "Central-product decomposition with certificate");
  decomp->add_option("path", path)->required();
  decomp->add_option("--report", report_path, "Write the report envelope here");
  add_json_flag(decomp);

  // verify
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->require_subcommand(1);
  auto* verify_suite = verify->add_subcommand("suite", "Lemma checks and decomposition round-trips over the catalog");
  verify_suite->add_option("--field", field, "F<p>")->required();
  verify_suite->add_option("--max-dim", max_dim, "Largest catalog dimension")->required();
  verify_suite->add_option("--seed", seed, "Seed for the random entries")->capture_default_str();
  verify_suite->add_option("--report", report_path, "Write the report envelope here");
  add_json_flag(verify_suite);
  auto* verify_cert = verify->add_subcommand("certificate", "Re-check a decomposition certificate");
  verify_cert->add_option("path", path, "Algebra file")->required();
  verify_cert->add_option("certificate", cert_path, "Certificate or report envelope")->required();
  add_json_flag(verify_cert);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::CallForVersion& e) {
    out << kToolVersion << "\n";
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << json{{"error", {{"code", "UsageError"}, {"message", e.what()}}}}.dump() << "\n";
    return kInvalidInput;
  }

  const std::string command = [&] {
    std::string c;
    for (const auto& a : args) c += (c.empty() ? "" : " ") + a;
    return c;
  }();
  detail::Stopwatch clock;

  auto finish = [&](const std::string& digest, json result, const std::string& text) {
    const json env = envelope(command, digest, std::move(result), clock.elapsed_ms());
    if (!report_path.empty()) io::write_text(report_path, env.dump(2) + "\n");
    if (as_json) {
      out << env.dump(2) << "\n";
    } else {
      out << text;
    }
  };

  try {
    if (gen->parsed()) {
      if (gen_cp->parsed()) {
        const LieAlgebra a = io::load(left_path);
        const LieAlgebra b = io::load(right_path);
        detail::emit_algebra(central_product_on_centers(a, b, count).algebra, output, out);
        return kSuccess;
      }
      const Domain domain = Domain::parse(field);
      if (domain.is_prime() && domain.modulus() > Domain::kDefaultPrimeCap) {
        throw Error(ErrorCode::InvalidDomain, "p exceeds the configured cap " + std::to_string(Domain::kDefaultPrimeCap));
      }
      if (gen_abelian->parsed()) detail::emit_algebra(abelian(n, domain), output, out);
      if (gen_heis->parsed()) detail::emit_algebra(heisenberg(m, domain), output, out);
      if (gen_fil->parsed()) detail::emit_algebra(filiform_standard(dim, domain), output, out);
      if (gen_cat->parsed()) {
        std::filesystem::create_directories(output);
        const auto entries = catalog(domain, max_dim, seed);
        json index = json::array();
        for (std::size_t i = 0; i < entries.size(); ++i) {
          const std::string file = detail::file_stem_for(i, entries[i].id);
          io::save(entries[i].algebra, std::filesystem::path(output) / file);
          index.push_back(json{{"id", entries[i].id}, {"file", file}, {"dim", entries[i].algebra.dim()}});
        }
        io::write_text(std::filesystem::path(output) / "index.json", index.dump(2) + "\n");
        out << "wrote " << entries.size() << " algebras to " << output << "\n";
      }
      return kSuccess;
    }

    if (info->parsed()) {
      const auto [L, digest] = detail::load_with_digest(path);
      const SeriesReport lower = lower_central_series(L);
      const SeriesReport upper = upper_central_series(L);
      const Subspace z = center(L);
      json result{{"dim", L.dim()},
                  {"field", L.domain().name()},
                  {"nilpotent", lower.nilpotency_class.has_value()},
                  {"nilpotency_class", lower.nilpotency_class ? json(*lower.nilpotency_class) : json(nullptr)},
                  {"lower_central_dims", lower.dims()},
                  {"upper_central_dims", upper.dims()},
                  {"center", io::subspace_to_json(z, &L)}};
      std::ostringstream text;
      text << "dim: " << L.dim() << "\nfield: " << L.domain().name() << "\nnilpotency class: "
           << (lower.nilpotency_class ? std::to_string(*lower.nilpotency_class) : "not nilpotent")
           << "\nlower central dims: " << detail::join_dims(lower.dims())
           << "\nupper central dims: " << detail::join_dims(upper.dims())
           << "\ncenter: " << io::format_subspace(z, &L) << "\n";
      finish(digest, std::move(result), text.str());
      return kSuccess;
    }

    if (maximal->parsed()) {
      const auto [L, digest] = detail::load_with_digest(path);
      const MaximalEnumeration e = enumerate_maximal(L);
      std::ostringstream text;
      text << "maximal subalgebras: " << e.count() << "\n";
      if (list) {
        for (const auto& s : e.items) text << io::format_subspace(s, &L) << "\n";
      }
      finish(digest, io::maximal_to_json(e, L, list), text.str());
      return kSuccess;
    }

    if (check_fratt->parsed()) {
      const auto [L, digest] = detail::load_with_digest(path);
      const FrattinianVerdict v = is_frattinian(L);
      std::ostringstream text;
      if (v.is_frattinian) {
        text << "Frattinian: yes (" << v.checked_count << " maximal subalgebras checked)\n";
      } else {
        text << "Frattinian: no\nwitness M = " << io::format_subspace(*v.witness, &L)
             << "\nZ(M) = Z(L) = " << io::format_subspace(center(L), &L) << "\n";
      }
      finish(digest, io::verdict_to_json(v, L), text.str());
      return v.is_frattinian ? kSuccess : kPropertyFails;
    }

    if (decomp->parsed()) {
      const auto [L, digest] = detail::load_with_digest(path);
      std::ostringstream text;
      try {
        const DecompositionCertificate cert = decompose(L);
        const ObligationReport r = verify_certificate(L, cert);
        text << "case " << to_string(cert.kind) << ", " << cert.factors.size() << " factor(s), verified: "
             << (r.passed() ? "yes" : "no") << "\n";
        for (const auto& f : cert.factors) text << "  " << io::format_subspace(f, &L) << "\n";
        finish(digest, detail::certificate_result(L, cert, r), text.str());
        return r.passed() ? kSuccess : kPropertyFails;
      } catch (const NotFrattinianError& e) {
        text << "not Frattinian; witness M = " << io::format_subspace(e.witness(), &L) << "\n";
        finish(digest, json{{"verified", false}, {"error", error_record(e)["error"]},
                            {"witness", io::subspace_to_json(e.witness(), &L)}},
               text.str());
        return kPropertyFails;
      } catch (const InternalAssertionFailure& e) {
        text << e.what() << "\n";
        detail::print_witnesses(text, e.witnesses(), L);
        finish(digest, json{{"verified", false}, {"error", error_record(e)["error"]},
                            {"witness_subspaces", io::named_subspaces_to_json(e.witnesses(), &L)}},
               text.str());
        return kPropertyFails;
      }
    }

    if (verify_cert->parsed()) {
      const auto [L, digest] = detail::load_with_digest(path);
      io::json doc;
      try {
        doc = io::json::parse(io::read_file(cert_path));
      } catch (const io::json::exception& e) {
        throw Error(ErrorCode::MalformedCertificate, e.what());
      }
      if (doc.contains("result")) doc = doc["result"];
      const DecompositionCertificate cert = io::certificate_from_json(doc, L);
      const ObligationReport r = verify_certificate(L, cert);
      std::ostringstream text;
      text << "certificate " << (r.passed() ? "verified" : "rejected") << "\n";
      for (const auto& o : r.obligations) {
        if (o.pass) continue;
        text << "failed: " << o.name << "\n";
        detail::print_witnesses(text, o.witnesses, L);
      }
      finish(digest, json{{"verified", r.passed()}, {"obligations", io::obligations_to_json(r, &L)}}, text.str());
      return r.passed() ? kSuccess : kPropertyFails;
    }

    if (verify_suite->parsed()) {
      const Domain domain = Domain::parse(field);
      const auto outcome = detail::run_suite(domain, max_dim, seed);
      const json& r = outcome.result;
      std::ostringstream text;
      text << "catalog " << domain.name() << " dim <= " << max_dim << ": " << r["algebras"].get<std::size_t>()
           << " algebras, " << r["pairs"].get<std::size_t>() << " (algebra, maximal) pairs\n";
      for (const auto& [id, t] : r["lemmas"].items()) {
        text << "  " << id << ": " << t["passed"].get<std::size_t>() << " passed, " << t["failed"].get<std::size_t>()
             << " failed\n";
      }
      text << "  load/save round-trip failures: " << r["roundtrip_failures"].get<std::size_t>() << "\n";
      text << "  decompositions verified: " << r["decompositions_verified"].get<std::size_t>() << " of "
           << r["frattinian_nonabelian"].get<std::size_t>() << " Frattinian nonabelian algebras\n";
      text << "  case histogram: one=" << r["case_histogram"]["one"].get<std::size_t>()
           << " two=" << r["case_histogram"]["two"].get<std::size_t>() << "\n";
      for (const auto& f : r["decomposition_failures"]) {
        text << "  decomposition failure " << f["algebra_id"].get<std::string>() << ": "
             << f["message"].get<std::string>() << "\n";
      }
      for (const auto& f : r["lemma_failures"]) {
        text << "  lemma failure " << f["lemma_id"].get<std::string>() << " on "
             << f["algebra_id"].get<std::string>() << "\n";
      }
      text << (outcome.passed ? "PASS" : "FAIL") << "\n";
      const std::string digest =
          sha256_hex("catalog:" + domain.name() + ":" + std::to_string(max_dim) + ":" + std::to_string(seed));
      finish(digest, r, text.str());
      return outcome.passed ? kSuccess : kPropertyFails;
    }
  } catch (const Error& e) {
    err << error_record(e).dump() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << json{{"error", {{"code", "IOError"}, {"message", e.what()}}}}.dump() << "\n";
    return kInvalidInput;
  }
  return exit_code;
}

}  // namespace liesc::cli
