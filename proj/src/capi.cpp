#include "erdosl.h"

#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "ball.hpp"
#include "bernoulli.hpp"
#include "dedekind.hpp"
#include "density.hpp"
#include "enumeration.hpp"
#include "erdos_function.hpp"
#include "lseries.hpp"
#include "moments.hpp"
#include "precision.hpp"
#include "rational_util.hpp"
#include "serialize.hpp"
#include "support.hpp"

using erdos::Ball;
using erdos::Errc;
using erdos::PrecisionContext;

struct erdosl_ctx {
  PrecisionContext ctx;
};
struct erdosl_fn {
  erdos::ErdosFunction fn;
};
struct erdosl_fn_iter {
  unsigned long q;
  int parity;
  std::uint64_t next_rank, count;
};
struct erdosl_real {
  Ball value;
};
struct erdosl_rat {
  mpq_class value;
};
struct erdosl_poly {
  erdos::PolynomialInQ poly;
};
struct erdosl_moment {
  erdos::MomentReport report;
};
struct erdosl_table {
  erdos::DistributionTable table;
};
struct erdosl_density {
  erdos::DensityReport report;
};
struct erdosl_verification {
  erdos::VerificationRecord record;
};

namespace {

thread_local std::string g_last_error;

erdosl_status status_of(Errc c) {
  switch (c) {
    case Errc::invalid_argument:
    case Errc::invalid_modulus:
    case Errc::size_mismatch:
    case Errc::length_mismatch: return ERDOSL_ERR_INVALID;
    case Errc::singular_argument: return ERDOSL_ERR_SINGULAR;
    case Errc::parity_mismatch:
    case Errc::parity_violation:
    case Errc::bound_vacuous: return ERDOSL_ERR_PARITY;
    case Errc::not_coprime: return ERDOSL_ERR_NOT_COPRIME;
    case Errc::empty_population: return ERDOSL_ERR_EMPTY;
    case Errc::population_too_large: return ERDOSL_ERR_TOO_LARGE;
    case Errc::precision_exhausted: return ERDOSL_ERR_PRECISION;
    case Errc::reconstruction_failure: return ERDOSL_ERR_RECONSTRUCT;
    case Errc::tail_bound_unavailable: return ERDOSL_ERR_UNAVAILABLE;
    default: return ERDOSL_ERR_INTERNAL;
  }
}

template <typename Fn>
erdosl_status guarded(Fn&& fn) {
  try {
    fn();
    return ERDOSL_OK;
  } catch (const erdos::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return ERDOSL_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ERDOSL_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(::operator new(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

erdos::Parity parity_from(int p) {
  switch (p) {
    case ERDOSL_PARITY_ODD: return erdos::Parity::Odd;
    case ERDOSL_PARITY_EVEN: return erdos::Parity::Even;
    default: erdos::fail(Errc::invalid_argument, "bad parity selector");
  }
}

const PrecisionContext& ctx_of(const erdosl_ctx* ctx) {
  static const PrecisionContext default_ctx;
  return ctx ? ctx->ctx : default_ctx;
}

}  // namespace

extern "C" {

const char* erdosl_version(void) { return "0.1.0"; }

const char* erdosl_last_error(void) { return g_last_error.c_str(); }

void erdosl_free_string(char* s) { ::operator delete(s); }

erdosl_status erdosl_ctx_new(long precision_bits, erdosl_ctx** out) {
  return guarded([&] { *out = new erdosl_ctx{PrecisionContext(precision_bits)}; });
}

void erdosl_ctx_free(erdosl_ctx* ctx) { delete ctx; }

void erdosl_real_free(erdosl_real* r) { delete r; }

erdosl_status erdosl_real_mid_dec(const erdosl_real* r, int digits, char** out) {
  return guarded([&] { *out = dup_string(r->value.mid_decimal(digits)); });
}

erdosl_status erdosl_real_rad_dec(const erdosl_real* r, char** out) {
  return guarded([&] { *out = dup_string(r->value.rad_decimal()); });
}

erdosl_status erdosl_real_mid_hex(const erdosl_real* r, char** out) {
  return guarded([&] { *out = dup_string(r->value.mid_hex()); });
}

erdosl_status erdosl_real_rad_hex(const erdosl_real* r, char** out) {
  return guarded([&] { *out = dup_string(r->value.rad_hex()); });
}

double erdosl_real_mid_d(const erdosl_real* r) { return r->value.mid_double(); }

double erdosl_real_rad_d(const erdosl_real* r) { return r->value.rad_double_upper(); }

int erdosl_real_certified_sign(const erdosl_real* r) { return r->value.certified_sign(); }

int erdosl_real_overlaps(const erdosl_real* a, const erdosl_real* b) {
  return a->value.overlaps(b->value) ? 1 : 0;
}

void erdosl_rat_free(erdosl_rat* r) { delete r; }

erdosl_status erdosl_rat_num(const erdosl_rat* r, char** out) {
  return guarded([&] { *out = dup_string(r->value.get_num().get_str()); });
}

erdosl_status erdosl_rat_den(const erdosl_rat* r, char** out) {
  return guarded([&] { *out = dup_string(r->value.get_den().get_str()); });
}

erdosl_status erdosl_fn_parse(const char* signs, erdosl_fn** out) {
  return guarded([&] { *out = new erdosl_fn{erdos::ErdosFunction::parse(signs)}; });
}

void erdosl_fn_free(erdosl_fn* f) { delete f; }

erdosl_status erdosl_fn_format(const erdosl_fn* f, char** out) {
  return guarded([&] { *out = dup_string(f->fn.to_string()); });
}

unsigned long erdosl_fn_q(const erdosl_fn* f) { return f->fn.modulus(); }

int erdosl_fn_parity(const erdosl_fn* f) {
  switch (f->fn.parity()) {
    case erdos::Parity::Odd: return ERDOSL_PARITY_ODD;
    case erdos::Parity::Even: return ERDOSL_PARITY_EVEN;
    default: return ERDOSL_PARITY_NEITHER;
  }
}

erdosl_status erdosl_fn_negate(const erdosl_fn* f, erdosl_fn** out) {
  return guarded([&] { *out = new erdosl_fn{f->fn.negated()}; });
}

erdosl_status erdosl_enum_count(unsigned long q, int parity, char** out) {
  return guarded([&] {
    mpz_class c = (parity == ERDOSL_PARITY_ALL) ? erdos::erdos_count(q)
                                                : erdos::erdos_parity_count(q, parity_from(parity));
    *out = dup_string(c.get_str());
  });
}

erdosl_status erdosl_enum_new(unsigned long q, int parity, erdosl_fn_iter** out) {
  return guarded([&] {
    std::uint64_t count = (parity == ERDOSL_PARITY_ALL)
                              ? erdos::ErdosEnumerator::count_u64(q)
                              : erdos::ParityEnumerator::count_u64(q, parity_from(parity));
    *out = new erdosl_fn_iter{q, parity, 0, count};
  });
}

erdosl_status erdosl_enum_next(erdosl_fn_iter* it, erdosl_fn** out) {
  if (it->next_rank >= it->count) return ERDOSL_END;
  return guarded([&] {
    erdos::ErdosFunction f =
        (it->parity == ERDOSL_PARITY_ALL)
            ? erdos::ErdosEnumerator::unrank(it->q, it->next_rank)
            : erdos::ParityEnumerator::unrank(it->q, parity_from(it->parity), it->next_rank);
    ++it->next_rank;
    *out = new erdosl_fn{std::move(f)};
  });
}

void erdosl_enum_free(erdosl_fn_iter* it) { delete it; }

erdosl_status erdosl_l_value(const erdosl_fn* f, unsigned k, int method, const erdosl_ctx* ctx,
                             erdosl_real** out) {
  return guarded([&] {
    erdos::LMethod m;
    switch (method) {
      case ERDOSL_METHOD_DIRECT: m = erdos::LMethod::DirectSum; break;
      case ERDOSL_METHOD_DIGAMMA: m = erdos::LMethod::Digamma; break;
      case ERDOSL_METHOD_CLOSED: m = erdos::LMethod::ClosedForm; break;
      default: erdos::fail(Errc::invalid_argument, "bad method selector");
    }
    *out = new erdosl_real{erdos::l_value(f->fn, k, m, ctx_of(ctx)).value};
  });
}

erdosl_status erdosl_nonvanishing_bound(unsigned k, const erdosl_ctx* ctx, erdosl_real** out) {
  return guarded([&] { *out = new erdosl_real{erdos::nonvanishing_bound(k, ctx_of(ctx))}; });
}

erdosl_status erdosl_dedekind_sum(size_t len, const unsigned long* a, const unsigned* m,
                                  unsigned distinguished, const erdosl_ctx* ctx,
                                  erdosl_real** out) {
  return guarded([&] {
    erdos::DedekindSpec spec{std::vector<unsigned long>(a, a + len),
                             std::vector<unsigned>(m, m + len), distinguished};
    *out = new erdosl_real{erdos::dedekind_sum_numeric(spec, ctx_of(ctx))};
  });
}

erdosl_status erdosl_s_qk(unsigned u, unsigned long q, unsigned k, const erdosl_ctx* ctx,
                          erdosl_real** out) {
  return guarded([&] { *out = new erdosl_real{erdos::s_qk(u, q, k, ctx_of(ctx))}; });
}

erdosl_status erdosl_reciprocity_rhs(size_t len, const unsigned long* a, const unsigned* m,
                                     erdosl_rat** out) {
  return guarded([&] {
    *out = new erdosl_rat{erdos::reciprocity_rhs(std::vector<unsigned long>(a, a + len),
                                                 std::vector<unsigned>(m, m + len))};
  });
}

erdosl_status erdosl_reciprocity_residual(size_t len, const unsigned long* a, const unsigned* m,
                                          const erdosl_ctx* ctx, erdosl_real** out) {
  return guarded([&] {
    *out = new erdosl_real{erdos::reciprocity_check(std::vector<unsigned long>(a, a + len),
                                                    std::vector<unsigned>(m, m + len),
                                                    ctx_of(ctx))};
  });
}

erdosl_status erdosl_sign_convention(char** out) {
  return guarded([&] { *out = dup_string(erdos::dedekind_sign_convention().tag()); });
}

erdosl_status erdosl_spoly(unsigned u, unsigned k, erdosl_poly** out) {
  return guarded([&] { *out = new erdosl_poly{erdos::s_qk_polynomial(u, k)}; });
}

void erdosl_poly_free(erdosl_poly* p) { delete p; }

unsigned erdosl_poly_degree(const erdosl_poly* p) { return p->poly.degree(); }

erdosl_status erdosl_poly_coefficient(const erdosl_poly* p, unsigned j, erdosl_rat** out) {
  return guarded([&] { *out = new erdosl_rat{p->poly.coefficient(j)}; });
}

erdosl_status erdosl_moment_compute(unsigned long q, unsigned k, unsigned order, int method,
                            uint64_t samples, uint64_t seed, const erdosl_ctx* ctx,
                            erdosl_moment** out) {
  return guarded([&] {
    const PrecisionContext& c = ctx_of(ctx);
    erdos::MomentReport rep;
    if (q == 0) {
      if (order % 2 != 0) erdos::fail(Errc::invalid_argument, "limiting moments have even order");
      erdos::MomentMethod mm = (method == ERDOSL_MOMENT_PAPER) ? erdos::MomentMethod::PaperFormula
                                                               : erdos::MomentMethod::Limiting;
      if (method != ERDOSL_MOMENT_LIMIT && method != ERDOSL_MOMENT_PAPER)
        erdos::fail(Errc::invalid_argument, "q = 0 supports the limit and paper methods");
      rep = erdos::limiting_moment_report(order / 2, k, mm, c);
    } else {
      switch (method) {
        case ERDOSL_MOMENT_ENUMERATION: rep = erdos::moment_enumeration(q, k, order, c); break;
        case ERDOSL_MOMENT_PARTITION: rep = erdos::moment_partition_formula(q, k, order, c); break;
        case ERDOSL_MOMENT_PAPER: rep = erdos::moment_paper_formula(q, k, order, c); break;
        case ERDOSL_MOMENT_MONTECARLO:
          rep = erdos::monte_carlo_moments(q, k, order, samples, seed, c);
          break;
        default: erdos::fail(Errc::invalid_argument, "bad moment method selector");
      }
    }
    *out = new erdosl_moment{std::move(rep)};
  });
}

void erdosl_moment_free(erdosl_moment* m) { delete m; }

const char* erdosl_moment_method(const erdosl_moment* m) {
  return erdos::moment_method_name(m->report.method);
}

erdosl_status erdosl_moment_value(const erdosl_moment* m, erdosl_real** out) {
  return guarded([&] { *out = new erdosl_real{m->report.value}; });
}

int erdosl_moment_has_exact(const erdosl_moment* m) { return m->report.exact.has_value(); }

unsigned erdosl_moment_pi_exponent(const erdosl_moment* m) {
  return m->report.exact ? m->report.exact->pi_exponent : 0;
}

erdosl_status erdosl_moment_coefficient(const erdosl_moment* m, erdosl_rat** out) {
  return guarded([&] {
    if (!m->report.exact) erdos::fail(Errc::invalid_argument, "moment carries no exact value");
    *out = new erdosl_rat{m->report.exact->coeff};
  });
}

int erdosl_moment_has_std_error(const erdosl_moment* m) {
  return m->report.std_error.has_value();
}

double erdosl_moment_std_error(const erdosl_moment* m) {
  return m->report.std_error.value_or(0.0);
}

erdosl_status erdosl_distribution(unsigned long q, unsigned k, const erdosl_ctx* ctx,
                                  erdosl_table** out) {
  return guarded([&] { *out = new erdosl_table{erdos::empirical_cdf(q, k, ctx_of(ctx))}; });
}

void erdosl_table_free(erdosl_table* t) { delete t; }

erdosl_status erdosl_table_cdf_csv(const erdosl_table* t, char** out) {
  return guarded([&] { *out = dup_string(t->table.cdf_csv()); });
}

erdosl_status erdosl_table_histogram_csv(const erdosl_table* t, unsigned bins, char** out) {
  return guarded([&] { *out = dup_string(t->table.histogram_csv(bins)); });
}

erdosl_status erdosl_vanishing_bound(unsigned long q, char** out) {
  return guarded([&] { *out = dup_string(erdos::vanishing_bound(q).get_str()); });
}

erdosl_status erdosl_density_compute(unsigned long x, int mode, unsigned long guard_q,
                             const erdosl_ctx* ctx, erdosl_density** out) {
  return guarded([&] {
    erdos::DensityMode dm =
        (mode == ERDOSL_DENSITY_EXACT) ? erdos::DensityMode::ExactSmallQ : erdos::DensityMode::Bound;
    *out = new erdosl_density{erdos::density_ratio(x, dm, ctx_of(ctx), guard_q)};
  });
}

void erdosl_density_free(erdosl_density* d) { delete d; }

erdosl_status erdosl_density_numerator(const erdosl_density* d, char** out) {
  return guarded([&] { *out = dup_string(d->report.numerator.get_str()); });
}

erdosl_status erdosl_density_denominator(const erdosl_density* d, char** out) {
  return guarded([&] { *out = dup_string(d->report.denominator.get_str()); });
}

erdosl_status erdosl_density_ratio(const erdosl_density* d, erdosl_rat** out) {
  return guarded([&] { *out = new erdosl_rat{d->report.ratio}; });
}

erdosl_status erdosl_density_csv(const erdosl_density* d, char** out) {
  return guarded([&] { *out = dup_string(erdos::density_csv(d->report)); });
}

erdosl_status erdosl_verify(unsigned long q, long max_bits, unsigned long guard_q,
                            const erdosl_ctx* ctx, erdosl_verification** out) {
  return guarded([&] {
    *out = new erdosl_verification{erdos::count_vanishing(q, ctx_of(ctx), guard_q, max_bits)};
  });
}

void erdosl_verification_free(erdosl_verification* v) { delete v; }

erdosl_status erdosl_verification_population(const erdosl_verification* v, char** out) {
  return guarded([&] { *out = dup_string(v->record.population.get_str()); });
}

uint64_t erdosl_verification_zero_count(const erdosl_verification* v) {
  return v->record.certified_zero_count;
}

uint64_t erdosl_verification_undecided(const erdosl_verification* v) {
  return v->record.undecided_count;
}

long erdosl_verification_final_bits(const erdosl_verification* v) {
  return v->record.final_precision_bits;
}

erdosl_status erdosl_verification_min_abs(const erdosl_verification* v, erdosl_real** out) {
  return guarded([&] { *out = new erdosl_real{v->record.min_abs_l}; });
}

} /* extern "C" */
