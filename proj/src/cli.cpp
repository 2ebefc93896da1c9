#include "psifloor/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>

#include "psifloor/serialize.hpp"
#include "psifloor/verify.hpp"

namespace psifloor {

namespace {

constexpr int kMaxTableDegree = 6;

struct Request {
  int d = 0;
  std::string k;
  std::string alpha;
  std::optional<std::string> beta;
  std::string method = "recursion";
  bool tilde = false;
  std::string format = "plain";
  std::string cache;
  int parallelism = 1;
  bool trace = false;
  std::string order;
  int max_d = 0;
  std::string filter;
};

InvariantKey key_of(const Request& r) {
  InvariantKey key;
  key.d = r.d;
  key.k = IntSeq::parse(r.k, SeqBase::Zero);
  key.alpha = IntSeq::parse(r.alpha, SeqBase::One);
  if (r.beta) {
    key.beta = IntSeq::parse(*r.beta, SeqBase::One);
  } else {
    key.beta = InvariantKey::absolute(r.d, key.k).beta;
  }
  return key;
}

std::string cache_path(const Request& r) {
  if (const char* env = std::getenv("PSIFLOOR_CACHE"); env && *env) return env;
  return r.cache;
}

// Without --beta the request is absolute and Ntilde = k!/|k|! * N, with no
// beta! factor for the d unconstrained ends.
Rational printed_tilde(const Request& r, const ComputationResult& result) {
  if (r.beta) return result.value_tilde;
  return convert(result.value_N, result.key.k, IntSeq(SeqBase::One), Direction::ToTilde);
}

void print_result(std::ostream& out, const Request& r, const ComputationResult& result) {
  const Rational tilde = printed_tilde(r, result);
  if (r.format == "json") {
    Json j = to_json(result);
    j["tilde"] = to_string(tilde);
    if (result.method == Method::Both) {
      j["floor"] = to_string(result.floor_value);
      j["recursion"] = to_string(result.recursion_value);
      j["agree"] = result.agree;
    }
    out << j.dump() << '\n';
  } else if (r.format == "csv") {
    out << "d,k,alpha,beta,N,tilde,method\n";
    out << result.key.d << ",\"" << result.key.k.to_string() << "\",\"" << result.key.alpha.to_string() << "\",\""
        << result.key.beta.to_string() << "\"," << to_string(result.value_N) << ',' << to_string(tilde)
        << ',' << to_string(result.method) << '\n';
  } else {
    out << to_string(r.tilde ? tilde : result.value_N) << '\n';
  }
}

int cmd_compute(const Request& r, std::ostream& out, std::ostream& err) {
  const InvariantKey key = key_of(r);
  check_key(key);
  Engine engine(r.parallelism);
  const std::string cache = cache_path(r);
  if (!cache.empty()) engine.cache_load(cache);
  const Method method = parse_method(r.method);
  if (r.trace) {
    if (!key.alpha.is_zero() || key.beta != InvariantKey::absolute(key.d, key.k).beta) {
      throw DomainError("--trace supports absolute keys only");
    }
    std::vector<int> order;
    if (r.order.empty()) {
      for (int a = key.k.end_index() - 1; a >= key.k.first_index(); --a) order.insert(order.end(), key.k[a], a);
    } else {
      // Psi-powers left to right, e.g. "4,4,0".  Parsed as a plain list, not a sequence.
      const IntSeq listed = IntSeq::parse(r.order + ",1", SeqBase::Zero);
      order.assign(listed.entries().begin(), listed.entries().end() - 1);
    }
    TildeTrace trace = floor_tilde_trace(key.d, key.k, order);
    for (const TraceEntry& e : trace.entries) {
      Json j = {{"diagram", to_json(e.diagram)},
                {"choice", to_json(e.diagram, e.choice)},
                {"elements", e.elements},
                {"mu_D", to_string(e.mu_diagram)},
                {"mu_C", to_string(e.mu_choice)},
                {"contribution", to_string(e.contribution)}};
      out << j.dump() << '\n';
    }
    out << "{\"trace_total\":\"" << to_string(trace.total) << "\"}\n";
  }
  const ComputationResult result = engine.compute(key, method);
  print_result(out, r, result);
  if (!cache.empty()) engine.cache_save(cache);
  if (!result.agree) {
    err << "floor " << to_string(result.floor_value) << " != recursion " << to_string(result.recursion_value) << '\n';
    return 1;
  }
  return 0;
}

int cmd_table(const Request& r, std::ostream& out) {
  if (r.max_d < 1 || r.max_d > kMaxTableDegree) {
    throw DomainError("--max-d must lie in 1.." + std::to_string(kMaxTableDegree));
  }
  Engine engine(r.parallelism);
  const std::string cache = cache_path(r);
  if (!cache.empty()) engine.cache_load(cache);
  Json rows = Json::array();
  if (r.format == "csv") out << "d,k,N\n";
  for (int d = 1; d <= r.max_d; ++d) {
    const IntSeq k(SeqBase::Zero, {3 * d - 1});
    const Rational n = engine.recursion().invariant_N(InvariantKey::absolute(d, k));
    if (r.format == "json") {
      rows.push_back({{"d", d}, {"k", k.to_vector()}, {"N", to_string(n)}});
    } else if (r.format == "csv") {
      out << d << ',' << k.to_string() << ',' << to_string(n) << '\n';
    } else {
      out << d << ' ' << to_string(n) << '\n';
    }
  }
  if (r.format == "json") out << rows.dump() << '\n';
  if (!cache.empty()) engine.cache_save(cache);
  return 0;
}

int cmd_verify(const Request& r, std::ostream& out, std::ostream& err) {
  const std::vector<FixtureResult> results = run_fixtures(r.filter);
  if (results.empty()) {
    err << "warning: no fixture matches '" << r.filter << "'; nothing verified\n";
    return 0;
  }
  int failed = 0;
  for (const FixtureResult& f : results) {
    out << (f.pass ? "PASS " : "FAIL ") << f.name << ": expected " << f.expected << ", got " << f.actual << '\n';
    failed += !f.pass;
  }
  out << results.size() - failed << '/' << results.size() << " fixtures passed\n";
  return failed ? 1 : 0;
}

int cmd_crosscheck(const Request& r, std::ostream& out) {
  Engine engine(r.parallelism);
  std::vector<InvariantKey> keys;
  if (r.d > 0) {
    keys.push_back(key_of(r));
  } else if (r.max_d > 0) {
    for (int d = 1; d <= r.max_d; ++d) {
      for (InvariantKey& k : admissible_keys(d)) keys.push_back(std::move(k));
    }
  } else {
    throw DomainError("crosscheck needs --d or --max-d");
  }
  int failed = 0;
  for (const InvariantKey& key : keys) {
    const CrosscheckReport rep = engine.crosscheck(key);
    failed += !rep.pass;
    if (r.format == "json") {
      Json j = to_json(key);
      j["floor"] = to_string(rep.floor);
      j["recursion"] = to_string(rep.recursion);
      j["pass"] = rep.pass;
      out << j.dump() << '\n';
    } else {
      out << (rep.pass ? "PASS " : "FAIL ") << key.to_string() << " floor=" << to_string(rep.floor)
          << " recursion=" << to_string(rep.recursion) << '\n';
    }
  }
  if (r.format != "json") out << keys.size() - failed << '/' << keys.size() << " keys agree\n";
  return failed ? 1 : 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact descendant Gromov-Witten invariants of the plane via Psi-floor diagrams and the "
               "Caporaso-Harris recursion"};
  app.require_subcommand(1);
  Request r;
  const std::string seq_help =
      "comma-separated entries; k starts at index 0, alpha and beta at index 1; \"\" is the zero sequence";

  auto add_key = [&](CLI::App* sub, bool required) {
    auto* d = sub->add_option("--d", r.d, "degree");
    auto* k = sub->add_option("--k", r.k, "Psi-power type k (" + seq_help + ")");
    if (required) {
      d->required();
      k->required();
    }
    sub->add_option("--alpha", r.alpha, "fixed tangencies alpha (" + seq_help + ")");
    sub->add_option("--beta", r.beta, "free tangencies beta (default: d at index 1)");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", r.format, "output format")->check(CLI::IsMember({"plain", "json", "csv"}));
    sub->add_option("--cache", r.cache, "JSON cache file (PSIFLOOR_CACHE overrides)");
    sub->add_option("--parallelism", r.parallelism, "worker threads")->check(CLI::PositiveNumber);
  };

  CLI::App* compute = app.add_subcommand("compute", "compute one invariant");
  add_key(compute, true);
  add_common(compute);
  compute->add_option("--method", r.method, "floor, recursion or both")
      ->check(CLI::IsMember({"floor", "recursion", "both"}));
  compute->add_flag("--tilde", r.tilde, "print Ntilde instead of N");
  compute->add_flag("--trace", r.trace, "list the markings contributing to Ntilde^floor (absolute keys)");
  compute->add_option("--order", r.order, "Psi-powers left to right for --trace (default: descending)");

  CLI::App* table = app.add_subcommand("table", "N_{d,(3d-1)} for d = 1..max-d by recursion");
  table->add_option("--max-d", r.max_d, "largest degree")->required();
  add_common(table);

  CLI::App* verify = app.add_subcommand("verify", "run the worked-example fixtures");
  verify->add_option("--filter", r.filter, "substring of fixture names");

  CLI::App* cross = app.add_subcommand("crosscheck", "compare enumeration and recursion");
  add_key(cross, false);
  cross->add_option("--max-d", r.max_d, "check every admissible key up to this degree");
  add_common(cross);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*compute) return cmd_compute(r, out, err);
    if (*table) return cmd_table(r, out);
    if (*verify) return cmd_verify(r, out, err);
    if (*cross) return cmd_crosscheck(r, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const StructuralError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const IntegrityError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace psifloor
