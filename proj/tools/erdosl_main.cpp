// Batch CLI over the erdosl C API.  Every subcommand emits a JSON (or CSV)
// payload with a metadata envelope; identical invocations produce identical
// bytes (exact values as integer strings, binary values as hex floats).
//
// Exit codes: 0 success, 1 cross-check failure, 2 invalid input,
// 3 precision exhausted.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "erdosl.h"
#include "json.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCrossCheck = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitPrecision = 3;

struct CliError {
  int exit_code;
  std::string message;
};

[[noreturn]] void die(int code, const std::string& msg) { throw CliError{code, msg}; }

int exit_code_for(erdosl_status s) {
  switch (s) {
    case ERDOSL_OK: return kExitOk;
    case ERDOSL_ERR_PRECISION: return kExitPrecision;
    default: return kExitInvalid;
  }
}

void check(erdosl_status s) {
  if (s != ERDOSL_OK && s != ERDOSL_END) die(exit_code_for(s), erdosl_last_error());
}

std::string take_string(char* s) {
  std::string out(s ? s : "");
  erdosl_free_string(s);
  return out;
}

// RAII wrappers around the C handles.
template <typename T, void (*Free)(T*)>
struct Handle {
  T* ptr = nullptr;
  Handle() = default;
  explicit Handle(T* p) : ptr(p) {}
  ~Handle() { reset(); }
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  Handle(Handle&& o) noexcept : ptr(o.ptr) { o.ptr = nullptr; }
  Handle& operator=(Handle&& o) noexcept {
    if (this != &o) {
      reset();
      ptr = o.ptr;
      o.ptr = nullptr;
    }
    return *this;
  }
  void reset() {
    if (ptr) Free(ptr);
    ptr = nullptr;
  }
  T** out() {
    reset();
    return &ptr;
  }
  T* get() const { return ptr; }
};

using Ctx = Handle<erdosl_ctx, erdosl_ctx_free>;
using Fn = Handle<erdosl_fn, erdosl_fn_free>;
using FnIter = Handle<erdosl_fn_iter, erdosl_enum_free>;
using Real = Handle<erdosl_real, erdosl_real_free>;
using Rat = Handle<erdosl_rat, erdosl_rat_free>;
using Poly = Handle<erdosl_poly, erdosl_poly_free>;
using Moment = Handle<erdosl_moment, erdosl_moment_free>;
using Table = Handle<erdosl_table, erdosl_table_free>;
using Density = Handle<erdosl_density, erdosl_density_free>;
using Verification = Handle<erdosl_verification, erdosl_verification_free>;

json real_json(const erdosl_real* r) {
  char* s = nullptr;
  json j;
  check(erdosl_real_mid_hex(r, &s));
  j["midpoint"] = take_string(s);
  check(erdosl_real_rad_hex(r, &s));
  j["radius"] = take_string(s);
  check(erdosl_real_mid_dec(r, 32, &s));
  j["midpoint_dec"] = take_string(s);
  check(erdosl_real_rad_dec(r, &s));
  j["radius_dec"] = take_string(s);
  return j;
}

json rat_json(const erdosl_rat* r) {
  char* s = nullptr;
  json j;
  check(erdosl_rat_num(r, &s));
  j["num"] = take_string(s);
  check(erdosl_rat_den(r, &s));
  j["den"] = take_string(s);
  return j;
}

json meta_json(long precision_bits, std::optional<std::uint64_t> seed = std::nullopt) {
  json meta;
  meta["tool"] = "erdosl";
  meta["version"] = erdosl_version();
  meta["precision_bits"] = precision_bits;
  char* tag = nullptr;
  check(erdosl_sign_convention(&tag));
  meta["dedekind_sign_convention"] = take_string(tag);
  if (seed) meta["seed"] = std::to_string(*seed);
  return meta;
}

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::fwrite(payload.data(), 1, payload.size(), stdout);
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) die(kExitInvalid, "cannot open output path: " + out_path);
  f.write(payload.data(), static_cast<std::streamsize>(payload.size()));
}

void emit_json(const json& doc, const std::string& out_path) {
  emit(doc.dump(2) + "\n", out_path);
}

std::vector<unsigned long> parse_list(const std::string& csv) {
  std::vector<unsigned long> out;
  std::string cur;
  for (char c : csv + ",") {
    if (c == ',') {
      if (cur.empty()) die(kExitInvalid, "empty element in list: " + csv);
      out.push_back(std::stoul(cur));
      cur.clear();
    } else if (c >= '0' && c <= '9') {
      cur.push_back(c);
    } else {
      die(kExitInvalid, "lists are comma-separated integers: " + csv);
    }
  }
  return out;
}

int parity_code(const std::string& parity) {
  if (parity.empty()) return ERDOSL_PARITY_ALL;
  if (parity == "odd") return ERDOSL_PARITY_ODD;
  if (parity == "even") return ERDOSL_PARITY_EVEN;
  die(kExitInvalid, "parity must be odd or even");
}

// --- subcommand payload builders -----------------------------------------

int run_enumerate(unsigned long q, const std::string& parity, bool count_only,
                  const std::string& format, long bits, const std::string& out_path) {
  int pf = parity_code(parity);
  char* cs = nullptr;
  check(erdosl_enum_count(q, pf, &cs));
  std::string count = take_string(cs);
  if (count_only && format.empty()) {
    emit(count + "\n", out_path);
    return kExitOk;
  }
  if (format == "csv") {
    std::string csv = "function\n";
    if (!count_only) {
      FnIter it;
      check(erdosl_enum_new(q, pf, it.out()));
      Fn f;
      while (erdosl_enum_next(it.get(), f.out()) == ERDOSL_OK) {
        char* s = nullptr;
        check(erdosl_fn_format(f.get(), &s));
        csv += take_string(s) + "\n";
      }
    }
    emit(csv, out_path);
    return kExitOk;
  }
  json doc;
  doc["meta"] = meta_json(bits);
  json res;
  res["q"] = q;
  if (!parity.empty()) res["parity"] = parity;
  res["count"] = count;
  if (!count_only) {
    json fns = json::array();
    FnIter it;
    check(erdosl_enum_new(q, pf, it.out()));
    Fn f;
    while (erdosl_enum_next(it.get(), f.out()) == ERDOSL_OK) {
      char* s = nullptr;
      check(erdosl_fn_format(f.get(), &s));
      fns.push_back(take_string(s));
    }
    res["functions"] = std::move(fns);
  }
  doc["result"] = std::move(res);
  emit_json(doc, out_path);
  return kExitOk;
}

int run_lvalue(unsigned long q, const std::string& signs, unsigned k, const std::string& method,
               long bits, const std::string& out_path) {
  Fn f;
  check(erdosl_fn_parse(signs.c_str(), f.out()));
  if (erdosl_fn_q(f.get()) != q) die(kExitInvalid, "--q disagrees with the sign string length");
  int m = ERDOSL_METHOD_DIRECT;
  if (method == "digamma") m = ERDOSL_METHOD_DIGAMMA;
  else if (method == "closed") m = ERDOSL_METHOD_CLOSED;
  else if (method != "direct") die(kExitInvalid, "method must be direct, digamma or closed");

  Ctx ctx;
  check(erdosl_ctx_new(bits, ctx.out()));
  Real v;
  check(erdosl_l_value(f.get(), k, m, ctx.get(), v.out()));

  json doc;
  doc["meta"] = meta_json(bits);
  json res;
  res["q"] = q;
  res["f"] = signs;
  res["k"] = k;
  res["method"] = method;
  int parity = erdosl_fn_parity(f.get());
  res["parity"] = parity == ERDOSL_PARITY_ODD ? "odd"
                  : parity == ERDOSL_PARITY_EVEN ? "even"
                                                 : "neither";
  res["value"] = real_json(v.get());
  res["certified_sign"] = erdosl_real_certified_sign(v.get());
  doc["result"] = std::move(res);
  emit_json(doc, out_path);
  return kExitOk;
}

int run_dedekind(const std::vector<unsigned long>& a, const std::vector<unsigned long>& m_in,
                 unsigned i, bool check_reciprocity, long bits, const std::string& out_path) {
  if (a.size() != m_in.size() || a.empty())
    die(kExitInvalid, "--a and --m must be non-empty lists of equal length");
  std::vector<unsigned> m(m_in.begin(), m_in.end());
  Ctx ctx;
  check(erdosl_ctx_new(bits, ctx.out()));
  Real v;
  check(erdosl_dedekind_sum(a.size(), a.data(), m.data(), i, ctx.get(), v.out()));

  json doc;
  doc["meta"] = meta_json(bits);
  json res;
  res["a"] = a;
  res["m"] = m_in;
  res["i"] = i;
  res["value"] = real_json(v.get());
  int exit_code = kExitOk;
  if (check_reciprocity) {
    Rat rhs;
    check(erdosl_reciprocity_rhs(a.size(), a.data(), m.data(), rhs.out()));
    Real residual;
    check(erdosl_reciprocity_residual(a.size(), a.data(), m.data(), ctx.get(), residual.out()));
    bool contains_zero = erdosl_real_certified_sign(residual.get()) == 0;
    json rec;
    rec["rhs"] = rat_json(rhs.get());
    rec["residual"] = real_json(residual.get());
    rec["residual_contains_zero"] = contains_zero;
    res["reciprocity"] = std::move(rec);
    if (!contains_zero) exit_code = kExitCrossCheck;
  }
  doc["result"] = std::move(res);
  emit_json(doc, out_path);
  return exit_code;
}

int run_spoly(unsigned u, unsigned k, long bits, const std::string& out_path) {
  Poly p;
  check(erdosl_spoly(u, k, p.out()));
  json doc;
  doc["meta"] = meta_json(bits);
  json res;
  res["u"] = u;
  res["k"] = k;
  unsigned deg = erdosl_poly_degree(p.get());
  res["degree"] = deg;
  json coeffs = json::array();
  for (unsigned j = 0; j <= deg; ++j) {
    Rat c;
    check(erdosl_poly_coefficient(p.get(), j, c.out()));
    coeffs.push_back(rat_json(c.get()));
  }
  res["coefficients"] = std::move(coeffs);
  doc["result"] = std::move(res);
  emit_json(doc, out_path);
  return kExitOk;
}

json moment_json(const erdosl_moment* m, std::optional<unsigned long> q, unsigned k,
                 unsigned order) {
  json res;
  if (q)
    res["q"] = *q;
  else
    res["q"] = "limit";
  res["k"] = k;
  res["order"] = order;
  res["method"] = erdosl_moment_method(m);
  if (erdosl_moment_has_exact(m)) {
    res["pi_exponent"] = erdosl_moment_pi_exponent(m);
    Rat c;
    check(erdosl_moment_coefficient(m, c.out()));
    json cj = rat_json(c.get());
    res["coefficient_num"] = cj["num"];
    res["coefficient_den"] = cj["den"];
  } else {
    res["pi_exponent"] = nullptr;
    res["coefficient_num"] = nullptr;
    res["coefficient_den"] = nullptr;
  }
  Real v;
  check(erdosl_moment_value(m, v.out()));
  json vj = real_json(v.get());
  res["midpoint"] = vj["midpoint"];
  res["radius"] = vj["radius"];
  res["midpoint_dec"] = vj["midpoint_dec"];
  if (erdosl_moment_has_std_error(m)) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", erdosl_moment_std_error(m));
    res["std_error"] = buf;
  }
  return res;
}

int run_moments(std::optional<unsigned long> q, unsigned k, unsigned order,
                const std::string& method, std::uint64_t samples, std::uint64_t seed, long bits,
                const std::string& out_path) {
  int mcode;
  if (method == "enumeration") mcode = ERDOSL_MOMENT_ENUMERATION;
  else if (method == "partition") mcode = ERDOSL_MOMENT_PARTITION;
  else if (method == "paper") mcode = ERDOSL_MOMENT_PAPER;
  else if (method == "montecarlo") mcode = ERDOSL_MOMENT_MONTECARLO;
  else if (method == "limit") mcode = ERDOSL_MOMENT_LIMIT;
  else die(kExitInvalid, "method must be enumeration, partition, paper, montecarlo or limit");
  if (!q && (mcode == ERDOSL_MOMENT_ENUMERATION || mcode == ERDOSL_MOMENT_MONTECARLO))
    mcode = ERDOSL_MOMENT_LIMIT;

  Ctx ctx;
  check(erdosl_ctx_new(bits, ctx.out()));
  Moment m;
  check(erdosl_moment_compute(q.value_or(0), k, order, mcode, samples, seed, ctx.get(), m.out()));

  std::optional<std::uint64_t> meta_seed;
  if (mcode == ERDOSL_MOMENT_MONTECARLO) meta_seed = seed;
  json doc;
  doc["meta"] = meta_json(bits, meta_seed);
  if (mcode == ERDOSL_MOMENT_PAPER) doc["meta"]["paper_literal"] = true;
  json res = moment_json(m.get(), q, k, order);

  int exit_code = kExitOk;
  if (mcode == ERDOSL_MOMENT_PARTITION && q) {
    // The partition route must enclose the enumeration ground truth whenever
    // the population is enumerable; disagreement is a hard failure.
    Moment ref;
    erdosl_status s = erdosl_moment_compute(*q, k, order, ERDOSL_MOMENT_ENUMERATION, 0, 0,
                                            ctx.get(), ref.out());
    if (s == ERDOSL_OK) {
      Real a, b;
      check(erdosl_moment_value(m.get(), a.out()));
      check(erdosl_moment_value(ref.get(), b.out()));
      bool ok = erdosl_real_overlaps(a.get(), b.get()) != 0;
      res["cross_check"] = ok ? "enumeration-overlap-ok" : "enumeration-overlap-FAILED";
      if (!ok) exit_code = kExitCrossCheck;
    } else if (s == ERDOSL_ERR_TOO_LARGE) {
      res["cross_check"] = "population-too-large";
    } else {
      check(s);
    }
  }
  doc["result"] = std::move(res);
  emit_json(doc, out_path);
  return exit_code;
}

int run_distribution(unsigned long q, unsigned k, unsigned bins, long bits,
                     const std::string& out_path) {
  if (out_path.empty()) die(kExitInvalid, "distribution requires --out PATH");
  Ctx ctx;
  check(erdosl_ctx_new(bits, ctx.out()));
  Table t;
  check(erdosl_distribution(q, k, ctx.get(), t.out()));
  char* s = nullptr;
  check(erdosl_table_cdf_csv(t.get(), &s));
  emit(take_string(s), out_path);
  std::string hist_path = out_path + ".hist.csv";
  check(erdosl_table_histogram_csv(t.get(), bins, &s));
  emit(take_string(s), hist_path);

  json doc;
  doc["meta"] = meta_json(bits);
  json res;
  res["q"] = q;
  res["k"] = k;
  res["bins"] = bins;
  res["cdf_path"] = out_path;
  res["histogram_path"] = hist_path;
  doc["result"] = std::move(res);
  std::string payload = doc.dump(2) + "\n";
  std::fwrite(payload.data(), 1, payload.size(), stdout);
  return kExitOk;
}

int run_density(unsigned long max_q, const std::string& mode, unsigned long guard,
                const std::string& format, long bits, const std::string& out_path) {
  int mcode;
  if (mode == "exact") mcode = ERDOSL_DENSITY_EXACT;
  else if (mode == "bound") mcode = ERDOSL_DENSITY_BOUND;
  else die(kExitInvalid, "mode must be exact or bound");
  Ctx ctx;
  check(erdosl_ctx_new(bits, ctx.out()));
  Density d;
  check(erdosl_density_compute(max_q, mcode, guard, ctx.get(), d.out()));
  if (format == "csv") {
    char* s = nullptr;
    check(erdosl_density_csv(d.get(), &s));
    emit(take_string(s), out_path);
    return kExitOk;
  }
  json doc;
  doc["meta"] = meta_json(bits);
  json res;
  res["x"] = max_q;
  res["mode"] = mode;
  char* s = nullptr;
  check(erdosl_density_numerator(d.get(), &s));
  res["numerator"] = take_string(s);
  check(erdosl_density_denominator(d.get(), &s));
  res["denominator"] = take_string(s);
  Rat ratio;
  check(erdosl_density_ratio(d.get(), ratio.out()));
  res["ratio"] = rat_json(ratio.get());
  doc["result"] = std::move(res);
  emit_json(doc, out_path);
  return kExitOk;
}

int run_verify(unsigned long max_q, long bits, unsigned long guard, long max_bits,
               const std::string& out_path) {
  Ctx ctx;
  check(erdosl_ctx_new(bits, ctx.out()));
  json doc;
  doc["meta"] = meta_json(bits);
  json rows = json::array();
  std::uint64_t undecided_total = 0;
  for (unsigned long q = 3; q <= max_q; q += 2) {
    Verification v;
    check(erdosl_verify(q, max_bits, guard, ctx.get(), v.out()));
    json row;
    row["q"] = q;
    char* s = nullptr;
    check(erdosl_verification_population(v.get(), &s));
    row["population"] = take_string(s);
    row["certified_zero_count"] = erdosl_verification_zero_count(v.get());
    row["undecided_count"] = erdosl_verification_undecided(v.get());
    row["final_precision_bits"] = erdosl_verification_final_bits(v.get());
    Real min_abs;
    check(erdosl_verification_min_abs(v.get(), min_abs.out()));
    row["min_abs_l"] = real_json(min_abs.get());
    undecided_total += erdosl_verification_undecided(v.get());
    rows.push_back(std::move(row));
  }
  doc["result"]["records"] = std::move(rows);
  doc["result"]["undecided_total"] = undecided_total;
  emit_json(doc, out_path);
  return undecided_total == 0 ? kExitOk : kExitPrecision;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified computations around L-series of periodic sign functions"};
  app.require_subcommand(1);

  long bits = 128;
  std::string out_path;
  app.add_option("--precision-bits", bits, "working precision in bits (>= 53)");
  app.add_option("--out", out_path, "write the payload to a file instead of stdout");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "list or count the population mod q");
  unsigned long en_q = 0;
  std::string en_parity, en_format;
  bool en_count_only = false;
  enumerate->add_option("--q", en_q, "odd modulus >= 3")->required();
  enumerate->add_option("--parity", en_parity, "odd|even population filter");
  enumerate->add_flag("--count-only", en_count_only, "emit only the exact count");
  enumerate->add_option("--format", en_format, "json|csv");

  // lvalue
  auto* lvalue = app.add_subcommand("lvalue", "certified L(k,f) for one function");
  unsigned long lv_q = 0;
  std::string lv_f, lv_method = "direct";
  unsigned lv_k = 1;
  lvalue->add_option("--q", lv_q, "odd modulus >= 3")->required();
  lvalue->add_option("--f", lv_f, "sign string, e.g. +-0")->required();
  lvalue->add_option("--k", lv_k, "positive integer argument")->required();
  lvalue->add_option("--method", lv_method, "direct|digamma|closed");

  // dedekind
  auto* dedekind = app.add_subcommand("dedekind", "generalized cotangent Dedekind sum");
  std::string dd_a, dd_m;
  std::vector<std::string> dd_ai(9);
  unsigned dd_i = 0;
  bool dd_check = false;
  dedekind->add_option("--a", dd_a, "moduli a_0..a_d, comma separated");
  for (unsigned j = 0; j < dd_ai.size(); ++j)
    dedekind->add_option("--a" + std::to_string(j), dd_ai[j], "modulus a_" + std::to_string(j));
  dedekind->add_option("--m", dd_m, "orders m_0..m_d, comma separated")->required();
  dedekind->add_option("--i", dd_i, "distinguished index")->required();
  dedekind->add_flag("--check-reciprocity", dd_check, "also verify the reciprocity identity");

  // spoly
  auto* spoly = app.add_subcommand("spoly", "cotangent power-sum polynomial in q");
  unsigned sp_u = 1, sp_k = 1;
  spoly->add_option("--u", sp_u, "power parameter u >= 1")->required();
  spoly->add_option("--k", sp_k, "derivative order parameter k >= 1")->required();

  // moments
  auto* moments = app.add_subcommand("moments", "population moments of L(k,f)");
  unsigned long mo_q = 0;
  bool mo_limit = false;
  unsigned mo_k = 1, mo_order = 2;
  std::string mo_method = "enumeration";
  std::uint64_t mo_samples = 100000, mo_seed = 1;
  moments->add_option("--q", mo_q, "odd modulus >= 3");
  moments->add_flag("--limit", mo_limit, "limiting moment (q -> infinity)");
  moments->add_option("--k", mo_k, "positive integer argument")->required();
  moments->add_option("--order", mo_order, "moment order")->required();
  moments->add_option("--method", mo_method, "enumeration|partition|paper|montecarlo|limit");
  moments->add_option("--samples", mo_samples, "Monte Carlo sample count");
  moments->add_option("--seed", mo_seed, "Monte Carlo seed (64-bit)");

  // distribution
  auto* distribution = app.add_subcommand("distribution", "empirical CDF and histogram CSV");
  unsigned long di_q = 0;
  unsigned di_k = 1, di_bins = 20;
  distribution->add_option("--q", di_q, "odd modulus >= 3")->required();
  distribution->add_option("--k", di_k, "positive integer argument")->required();
  distribution->add_option("--bins", di_bins, "histogram bin count");

  // density
  auto* density = app.add_subcommand("density", "cumulative vanishing-density ratio");
  unsigned long de_x = 0, de_guard = 17;
  std::string de_mode = "bound", de_format;
  density->add_option("--max-q", de_x, "upper end of the odd-q range")->required();
  density->add_option("--mode", de_mode, "exact|bound");
  density->add_option("--guard-q", de_guard, "largest q scanned exhaustively in exact mode");
  density->add_option("--format", de_format, "json|csv");

  // verify
  auto* verify = app.add_subcommand("verify", "certified non-vanishing scan of L(1,f)");
  unsigned long ve_x = 0, ve_guard = 17;
  long ve_max_bits = 4096;
  verify->add_option("--max-q", ve_x, "upper end of the odd-q range")->required();
  verify->add_option("--guard-q", ve_guard, "enumeration guard");
  verify->add_option("--max-bits", ve_max_bits, "precision escalation cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    if (*enumerate) return run_enumerate(en_q, en_parity, en_count_only, en_format, bits, out_path);
    if (*lvalue) return run_lvalue(lv_q, lv_f, lv_k, lv_method, bits, out_path);
    if (*dedekind) {
      std::vector<unsigned long> a;
      if (!dd_a.empty()) {
        a = parse_list(dd_a);
      } else {
        for (const std::string& v : dd_ai) {
          if (v.empty()) break;
          a.push_back(std::stoul(v));
        }
      }
      return run_dedekind(a, parse_list(dd_m), dd_i, dd_check, bits, out_path);
    }
    if (*spoly) return run_spoly(sp_u, sp_k, bits, out_path);
    if (*moments) {
      std::optional<unsigned long> q;
      if (!mo_limit) {
        if (mo_q == 0) die(kExitInvalid, "moments needs --q Q or --limit");
        q = mo_q;
      }
      return run_moments(q, mo_k, mo_order, mo_method, mo_samples, mo_seed, bits, out_path);
    }
    if (*distribution) return run_distribution(di_q, di_k, di_bins, bits, out_path);
    if (*density) return run_density(de_x, de_mode, de_guard, de_format, bits, out_path);
    if (*verify) return run_verify(ve_x, bits, ve_guard, ve_max_bits, out_path);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
