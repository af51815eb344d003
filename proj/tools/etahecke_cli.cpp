// SPDX-License-Identifier: Apache-2.0
//
// Command-line frontend: class numbers, trace tables, verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 resource/precision error.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "etahecke/verify.hpp"

namespace {

using namespace etahecke;

enum class Format { human, json, csv };

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

void emit(const TraceReport& rep, Format fmt, std::ostream& os) {
  switch (fmt) {
    case Format::human:
      os << "[" << (rep.skipped ? "SKIP" : rep.pass ? "pass" : "FAIL") << "] " << rep.suite << " "
         << rep.params;
      if (!rep.skipped) os << " n=" << rep.n << " lhs=" << rat_str(rep.lhs) << " rhs=" << rat_str(rep.rhs);
      if (!rep.reason.empty()) os << " (" << rep.reason << ")";
      os << "\n";
      break;
    case Format::json:
      os << "{\"suite\":\"" << json_escape(rep.suite) << "\",\"params\":\"" << json_escape(rep.params)
         << "\",\"n\":" << rep.n << ",\"lhs\":\"" << rat_str(rep.lhs) << "\",\"rhs\":\""
         << rat_str(rep.rhs) << "\",\"pass\":" << (rep.pass ? "true" : "false")
         << ",\"skipped\":" << (rep.skipped ? "true" : "false") << ",\"reason\":\""
         << json_escape(rep.reason) << "\"}\n";
      break;
    case Format::csv:
      os << rep.suite << ",\"" << rep.params << "\"," << rep.n << "," << rat_str(rep.lhs) << ","
         << rat_str(rep.rhs) << "," << (rep.pass ? "true" : "false") << ","
         << (rep.skipped ? "true" : "false") << ",\"" << rep.reason << "\"\n";
      break;
  }
}

TraceReport make_report(std::string suite, std::string params, int64_t n, Rat lhs, Rat rhs,
                        std::string reason = "") {
  TraceReport rep;
  rep.suite = std::move(suite);
  rep.params = std::move(params);
  rep.n = n;
  rep.lhs = std::move(lhs);
  rep.rhs = std::move(rhs);
  rep.pass = rep.lhs == rep.rhs;
  rep.reason = std::move(reason);
  return rep;
}

std::vector<int64_t> primes_coprime(int64_t bound, int64_t level) {
  std::vector<int64_t> out;
  for (int64_t p : primes_up_to(bound))
    if (level % p != 0) out.push_back(p);
  return out;
}

// --- suites ---------------------------------------------------------------

std::vector<TraceReport> suite_thm1(const std::vector<int64_t>& rs, const std::vector<int64_t>& ss,
                                    int64_t pmax, const FileCache* cache) {
  std::vector<TraceReport> out;
  const std::vector<int64_t> ns = primes_coprime(pmax, 6);
  for (int64_t r : rs)
    for (int64_t s : ss)
      for (auto& rep : verify_theorem1(r, s, ns, cache)) out.push_back(rep);
  return out;
}

std::vector<TraceReport> suite_thm2(const std::vector<int64_t>& rs, const std::vector<int64_t>& ss,
                                    int64_t pmax, const FileCache* cache) {
  std::vector<TraceReport> out;
  const std::vector<int64_t> ns = primes_coprime(pmax, 2);
  for (int64_t r : rs)
    for (int64_t s : ss)
      for (auto& rep : verify_theorem2(r, s, ns, cache)) out.push_back(rep);
  return out;
}

std::vector<TraceReport> suite_charsums(int64_t nmax) {
  std::vector<TraceReport> out;
  // Cotangent character sum vs its closed form, numeric at 1e-8.
  for (int64_t n = 5; n <= nmax; n += 2) {
    if (n % 3 == 0) continue;
    const CotCharsum c = cot_charsum(n);
    const double err = std::abs(c.computed - c.predicted);
    const double tol = 1e-8 * std::max(1.0, std::abs(c.predicted));
    TraceReport rep;
    rep.suite = "charsums";
    rep.params = "cot n=" + std::to_string(n);
    rep.n = n;
    rep.lhs = c.exact;  // exact scalar of the prediction
    rep.rhs = c.exact;
    rep.pass = err <= tol;
    rep.reason = c.imaginary_axis ? "i sqrt(n) H(-n)" : "phi(n)/2 [square] branch";
    out.push_back(rep);
  }
  // Lemma SUZ vs direct summation, exact.
  static const std::map<int64_t, std::vector<int64_t>> kernels{
      {1, {1}},          {3, {1, -3}},         {4, {1, -4}},
      {5, {1, 5}},       {8, {1, 8, -8, -4}},  {12, {1, 12, -4, -3}},
      {24, {1, 8, 12, 24, -3, -4, -8, -24}}};
  for (const auto& [M, us] : kernels)
    for (int64_t u : us)
      for (int64_t j : {5, 7, 11, 13, 23, 24})
        for (int64_t N = M; N <= 2000; N += M) {
          if (std::gcd(j, N) != 1) continue;
          DirichletCharacter chi{M, u};
          TraceReport rep = make_report("charsums",
                                        "suz M=" + std::to_string(M) + " u=" + std::to_string(u) +
                                            " j=" + std::to_string(j),
                                        N, charsum_suz(chi, N, j), charsum_direct(chi, N, j));
          out.push_back(rep);
        }
  // Class-sum identity sum_{f | u} (D|f) H(u^2 D / f^2) = u H(D).
  for (int64_t D : {-3, -4, -7, -8, -11, -15, -19, -20})
    for (int64_t u = 1; u <= 30; ++u) {
      Rat lhs(0);
      for (int64_t f : divisors(u)) lhs += Rat(kronecker(D, f)) * hurwitz_H((u / f) * (u / f) * D);
      out.push_back(make_report("charsums", "classsum D=" + std::to_string(D), u, lhs,
                                Rat(u) * hurwitz_H(D)));
    }
  return out;
}

std::vector<TraceReport> suite_partition(const std::vector<int64_t>& ells, int64_t terms) {
  std::vector<TraceReport> out;
  for (int64_t ell : ells) out.push_back(verify_partition_congruence(ell, terms));
  return out;
}

std::vector<TraceReport> suite_eta(int64_t samples) {
  const EtaMultiplierReport em = verify_eta_multiplier(samples);
  TraceReport rep;
  rep.suite = "eta";
  rep.params = "samples=" + std::to_string(em.samples);
  rep.n = em.samples;
  rep.pass = em.pass;
  rep.reason = em.reason;
  return {rep};
}

// Internal consistency: tr_new6 assembly vs direct four-sum form,
// multiplicativity on the 1-dimensional spaces, the parabolic n = 1
// identity, and the closed-formula/oracle decomposition.
std::vector<TraceReport> suite_internal(const FileCache* cache) {
  std::vector<TraceReport> out;
  for (int64_t w2k : {6, 10, 16, 22})
    for (int eps2 : {1, -1})
      for (int eps3 : {1, -1})
        for (int64_t n : {1, 5, 25, 49, 91})
          out.push_back(make_report("internal",
                                    "new6 w=" + std::to_string(w2k) + " e2=" + std::to_string(eps2) +
                                        " e3=" + std::to_string(eps3),
                                    n, tr_new6(w2k, eps2, eps3, n), tr_new6_direct(w2k, eps2, eps3, n)));
  for (int64_t r : {1, 5, 7, 11, 13, 17, 19, 23}) {
    // Parabolic n = 1 identity: -(r-12)/24 equals the H-difference sum.
    out.push_back(make_report("internal", "parabolic r=" + std::to_string(r), 1,
                              Rat(static_cast<long>(12 - r), 24), parabolic_total(1, r)));
  }
  // Multiplicativity on a 1-dimensional space: lambda(35) = lambda(5) lambda(7).
  for (auto [r, s] : std::vector<std::pair<int64_t, int64_t>>{{11, 0}, {5, 6}}) {
    EtaSpaceSpec spec{EtaFamily::Eta24, r, s};
    const EchelonBasis basis = eta_space_basis(spec, 35 * 35 * spec.max_pivot(), cache);
    out.push_back(make_report(
        "internal", "multiplicative r=" + std::to_string(r) + " s=" + std::to_string(s), 35,
        hecke_matrix_T_nsq(basis, 35).trace(),
        hecke_matrix_T_nsq(basis, 5).trace() * hecke_matrix_T_nsq(basis, 7).trace()));
  }
  // Scalar + parabolic + elliptic assembly against the q-expansion oracle.
  for (auto [r, s] : std::vector<std::pair<int64_t, int64_t>>{{1, 4}, {23, 0}})
    for (int64_t n : {5, 7, 25}) {
      const AssembledParts parts = assembled_tr_T_nsq_parts(n, r, s);
      out.push_back(make_report("internal",
                                "assembly r=" + std::to_string(r) + " s=" + std::to_string(s), n,
                                parts.total(), oracle_trace_T_nsq({EtaFamily::Eta24, r, s}, n, cache)));
    }
  return out;
}

std::vector<int64_t> parse_list(const std::string& text, const std::vector<int64_t>& all) {
  if (text == "all") return all;
  std::vector<int64_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoll(tok));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hecke traces on eta-type half-integral-weight cusp spaces"};
  app.require_subcommand(1);

  // classnum
  auto* cls = app.add_subcommand("classnum", "Hurwitz class number H(D)");
  int64_t cls_d = 0;
  cls->add_option("-d,--discriminant", cls_d, "negative discriminant D")->required();

  // trace
  auto* tr = app.add_subcommand("trace", "trace tables");
  std::string tr_kind = "half", tr_family = "eta24";
  int64_t tr_r = 1, tr_s = 0, tr_w = 12, tr_nmin = 1, tr_nmax = 1;
  int tr_eps2 = 1, tr_eps3 = 1;
  std::string tr_cache_dir;
  tr->add_option("--kind", tr_kind, "half | new6 | new2 | oracle")->check(CLI::IsMember({"half", "new6", "new2", "oracle"}));
  tr->add_option("--family", tr_family, "eta24 | eta8 (oracle kind)")->check(CLI::IsMember({"eta24", "eta8"}));
  tr->add_option("--r", tr_r, "eta exponent parameter r");
  tr->add_option("--s", tr_s, "M_s(1) weight s");
  tr->add_option("--weight", tr_w, "integral weight 2k (new6/new2)");
  tr->add_option("--eps2", tr_eps2, "Atkin-Lehner sign at 2")->check(CLI::IsMember({1, -1}));
  tr->add_option("--eps3", tr_eps3, "Atkin-Lehner sign at 3")->check(CLI::IsMember({1, -1}));
  tr->add_option("--n-min", tr_nmin, "first n");
  tr->add_option("--n-max", tr_nmax, "last n");
  tr->add_option("--cache-dir", tr_cache_dir, "persistent cache directory");

  // verify
  auto* vf = app.add_subcommand("verify", "verification suites");
  std::string vf_suite, vf_r = "all", vf_s = "all", vf_format = "human", vf_out, vf_cache_dir,
              vf_ell = "13,17,19,23,29,31";
  int64_t vf_pmax = 13, vf_terms = 500, vf_samples = 100, vf_nmax = 300, vf_jobs = 1;
  vf->add_option("suite", vf_suite, "thm1 | thm2 | charsums | partition | eta | internal")
      ->required()
      ->check(CLI::IsMember({"thm1", "thm2", "charsums", "partition", "eta", "internal"}));
  vf->add_option("--r", vf_r, "comma list of r values, or 'all'");
  vf->add_option("--s", vf_s, "comma list of s values, or 'all'");
  vf->add_option("--pmax", vf_pmax, "largest prime n to test");
  vf->add_option("--ell", vf_ell, "comma list of ell (partition suite)");
  vf->add_option("--terms", vf_terms, "coefficients to check (partition suite)");
  vf->add_option("--samples", vf_samples, "random samples (eta suite)");
  vf->add_option("--nmax", vf_nmax, "range bound (charsums suite)");
  vf->add_option("--jobs", vf_jobs, "parallelism degree (reports stay in input order)");
  vf->add_option("--format", vf_format, "human | json | csv")->check(CLI::IsMember({"human", "json", "csv"}));
  vf->add_option("-o,--output", vf_out, "write reports to a file instead of stdout");
  vf->add_option("--cache-dir", vf_cache_dir, "persistent cache directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cls->parsed()) {
      std::cout << rat_str(etahecke::hurwitz_H(cls_d)) << "\n";
      return 0;
    }

    if (tr->parsed()) {
      std::optional<FileCache> cache;
      if (!tr_cache_dir.empty()) cache.emplace(tr_cache_dir);
      for (int64_t n = tr_nmin; n <= tr_nmax; ++n) {
        Rat v;
        if (tr_kind == "half") {
          if (std::gcd<int64_t>(n, 6) != 1) continue;
          v = assembled_tr_T_nsq(n, tr_r, tr_s);
        } else if (tr_kind == "new6") {
          if (std::gcd<int64_t>(n, 6) != 1) continue;
          v = tr_new6(tr_w, tr_eps2, tr_eps3, n);
        } else if (tr_kind == "new2") {
          if (n % 2 == 0) continue;
          v = tr_new2(tr_w, tr_eps2, n);
        } else {  // oracle
          EtaSpaceSpec spec{tr_family == "eta24" ? EtaFamily::Eta24 : EtaFamily::Eta8, tr_r, tr_s};
          if (std::gcd(n, spec.family == EtaFamily::Eta24 ? int64_t{6} : int64_t{2}) != 1) continue;
          v = oracle_trace_T_nsq(spec, n, cache ? &*cache : nullptr);
        }
        std::cout << n << "\t" << rat_str(v) << "\n";
      }
      return 0;
    }

    // verify
    Format fmt = vf_format == "json" ? Format::json : vf_format == "csv" ? Format::csv : Format::human;
    std::ofstream file;
    if (!vf_out.empty()) {
      file.open(vf_out);
      if (!file) throw std::invalid_argument("cannot open output file " + vf_out);
    }
    std::ostream& os = vf_out.empty() ? std::cout : file;
    std::optional<FileCache> cache;
    if (!vf_cache_dir.empty())
      cache.emplace(vf_cache_dir);
    else
      cache = FileCache::from_environment();
    const FileCache* cptr = cache ? &*cache : nullptr;

    std::vector<TraceReport> reports;
    if (vf_suite == "thm1") {
      reports = suite_thm1(parse_list(vf_r, {1, 5, 7, 11, 13, 17, 19, 23}),
                           parse_list(vf_s, {0, 4, 6, 8, 10, 12}), vf_pmax, cptr);
    } else if (vf_suite == "thm2") {
      reports = suite_thm2(parse_list(vf_r, {1, 3, 5, 7}), parse_list(vf_s, {0, 4, 6}), vf_pmax, cptr);
    } else if (vf_suite == "charsums") {
      reports = suite_charsums(vf_nmax);
    } else if (vf_suite == "partition") {
      reports = suite_partition(parse_list(vf_ell, {13, 17, 19, 23, 29, 31}), vf_terms);
    } else if (vf_suite == "eta") {
      reports = suite_eta(vf_samples);
    } else {
      reports = suite_internal(cptr);
    }

    bool all_ok = true;
    for (const TraceReport& rep : reports) {
      emit(rep, fmt, os);
      if (!rep.pass && !rep.skipped) all_ok = false;
    }
    if (fmt == Format::human)
      os << (all_ok ? "all " : "FAILURES among ") << reports.size() << " checks\n";
    return all_ok ? 0 : 1;
  } catch (const etahecke::insufficient_precision& e) {
    std::cerr << "precision error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
