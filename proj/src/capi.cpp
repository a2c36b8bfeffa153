#include "partclass/partclass.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <new>
#include <optional>
#include <string>

#include "partclass/dirichlet.hpp"
#include "partclass/errors.hpp"
#include "partclass/exactparts.hpp"
#include "partclass/numerics.hpp"
#include "partclass/rademacher.hpp"
#include "partclass/verify.hpp"
#include "partclass/wright.hpp"

using namespace partclass;

struct pc_context {
  long precision_bits = 0;
  mutable std::mutex mutex;
  std::shared_ptr<const PartitionTable> table;
  std::map<int, std::shared_ptr<const DivisorClassSieve>> sieves;

  PrecisionContext precision_for(long n) const {
    return PrecisionContext(precision_bits > 0 ? precision_bits : auto_precision_bits(std::max(n, 0L)));
  }

  std::shared_ptr<const PartitionTable> table_covering(long n) {
    std::lock_guard lock(mutex);
    if (!table || !table->covers(n)) table = std::make_shared<const PartitionTable>(PartitionTable::build(n));
    return table;
  }

  std::shared_ptr<const DivisorClassSieve> sieve_covering(int modulus, long m) {
    std::lock_guard lock(mutex);
    auto& slot = sieves[modulus];
    if (!slot || !slot->covers(modulus, m)) {
      slot = std::make_shared<const DivisorClassSieve>(build_divisor_sieve(modulus, std::max(m, 1L)));
    }
    return slot;
  }
};

namespace {

thread_local std::string last_error;

pc_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Domain: return PC_ERR_DOMAIN;
    case ErrorKind::Pole: return PC_ERR_POLE;
    case ErrorKind::Coverage: return PC_ERR_COVERAGE;
    case ErrorKind::Resource: return PC_ERR_RESOURCE;
    case ErrorKind::Guard: return PC_ERR_GUARD;
    case ErrorKind::Singularity: return PC_ERR_SINGULARITY;
    case ErrorKind::ImaginaryResidue: return PC_ERR_IMAGINARY_RESIDUE;
    case ErrorKind::Kind: return PC_ERR_KIND;
    case ErrorKind::Shape: return PC_ERR_SHAPE;
    case ErrorKind::Index: return PC_ERR_INDEX;
    case ErrorKind::Format: return PC_ERR_FORMAT;
    case ErrorKind::Io: return PC_ERR_IO;
  }
  return PC_ERR_INTERNAL;
}

pc_status fail(pc_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename Body>
pc_status guarded(Body&& body) {
  try {
    last_error.clear();
    body();
    return PC_OK;
  } catch (const Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(PC_ERR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(PC_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

char* dup_optional(const std::optional<std::string>& s) { return s ? dup(*s) : nullptr; }

constexpr int kEstimateDigits = 30;
constexpr int kRatioDecimals = 10;
constexpr int kCellDecimals = 5;

std::string sci(const Real& x) { return x.to_scientific(kEstimateDigits); }

}  // namespace

extern "C" {

const char* pc_version(void) { return "1.0.0"; }

const char* pc_status_name(pc_status status) {
  switch (status) {
    case PC_OK: return "ok";
    case PC_ERR_DOMAIN: return "domain";
    case PC_ERR_POLE: return "pole";
    case PC_ERR_COVERAGE: return "coverage";
    case PC_ERR_RESOURCE: return "resource";
    case PC_ERR_GUARD: return "guard";
    case PC_ERR_SINGULARITY: return "singularity";
    case PC_ERR_IMAGINARY_RESIDUE: return "imaginary-residue";
    case PC_ERR_KIND: return "kind";
    case PC_ERR_SHAPE: return "shape";
    case PC_ERR_INDEX: return "index";
    case PC_ERR_FORMAT: return "format";
    case PC_ERR_IO: return "io";
    case PC_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case PC_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* pc_last_error(void) { return last_error.c_str(); }

void pc_string_free(char* s) { std::free(s); }

long pc_auto_precision_bits(long n) { return auto_precision_bits(std::max(n, 0L)); }

pc_status pc_context_create(long precision_bits, pc_context** out) {
  if (!out) return fail(PC_ERR_INVALID_ARGUMENT, "null output pointer");
  *out = nullptr;
  return guarded([&] {
    if (precision_bits != 0) (void)PrecisionContext(precision_bits);  // DomainError below 64 bits
    auto ctx = std::make_unique<pc_context>();
    ctx->precision_bits = precision_bits;
    *out = ctx.release();
  });
}

void pc_context_destroy(pc_context* ctx) { delete ctx; }

long pc_context_precision(const pc_context* ctx, long n) {
  if (!ctx) return 0;
  return ctx->precision_for(n).bits();
}

pc_status pc_table_ensure(pc_context* ctx, long max_n) {
  if (!ctx) return fail(PC_ERR_INVALID_ARGUMENT, "null context");
  return guarded([&] {
    if (max_n < 0) throw DomainError("table size must be >= 0");
    ctx->table_covering(max_n);
  });
}

long pc_table_max_n(const pc_context* ctx) {
  if (!ctx) return -1;
  std::lock_guard lock(ctx->mutex);
  return ctx->table ? ctx->table->max_n() : -1;
}

pc_status pc_table_load(pc_context* ctx, const char* path) {
  if (!ctx || !path) return fail(PC_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto loaded = std::make_shared<const PartitionTable>(PartitionTable::load(path));
    std::lock_guard lock(ctx->mutex);
    ctx->table = std::move(loaded);
  });
}

pc_status pc_table_save(pc_context* ctx, const char* path) {
  if (!ctx || !path) return fail(PC_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::shared_ptr<const PartitionTable> table;
    {
      std::lock_guard lock(ctx->mutex);
      table = ctx->table;
    }
    if (!table) throw CoverageError("no partition table to save");
    table->save(path);
  });
}

pc_status pc_partition_number(pc_context* ctx, long n, char** out) {
  if (!ctx || !out) return fail(PC_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    if (n < 0) throw DomainError("n must be >= 0");
    *out = dup(ctx->table_covering(n)->at(n).get_str());
  });
}

pc_status pc_exact_count(pc_context* ctx, long n, long modulus, long r, char** out) {
  if (!ctx || !out) return fail(PC_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    const PartCountQuery query(n, static_cast<int>(modulus), static_cast<int>(r));
    const auto table = ctx->table_covering(n);
    mpz_class value;
    if (r == 0) {
      value = zero_class_exact(n, query.modulus, *table);
    } else {
      value = part_count_exact(query, *table, *ctx->sieve_covering(query.modulus, n));
    }
    *out = dup(value.get_str());
  });
}

pc_status pc_exact_difference(pc_context* ctx, long n, long modulus, long r, char** out) {
  if (!ctx || !out) return fail(PC_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    const PartCountQuery query(n, static_cast<int>(modulus), static_cast<int>(r));
    const auto table = ctx->table_covering(n);
    const auto sieve = ctx->sieve_covering(query.modulus, n);
    *out = dup(part_diff_exact(n, query.residue, query.modulus, *table, *sieve).get_str());
  });
}

pc_status pc_asymptotic(pc_context* ctx, long n, long modulus, long r, long truncation, int with_exact,
                        pc_record* out) {
  if (!ctx || !out) return fail(PC_ERR_INVALID_ARGUMENT, "null argument");
  std::memset(out, 0, sizeof(*out));
  pc_record record{};
  const pc_status status = guarded([&] {
    if (truncation < 0) throw DomainError("truncation K must be >= 1");
    const PrecisionContext prec = ctx->precision_for(n);
    std::optional<std::string> estimate, main1, main2, t1, t2, prefactor, log_factor, exact, ratio, cell;
    std::optional<Real> estimate_value;
    std::optional<mpz_class> exact_value;

    if (r == 0) {
      if (truncation > 0) throw DomainError("the zero class has no Bessel series; drop the truncation");
      const ZeroClassAsymptotic main = theorem2_main(n, modulus, prec);
      prefactor = sci(main.prefactor);
      log_factor = sci(main.log_factor);
      estimate_value = main.value;
      if (with_exact) exact_value = zero_class_exact(n, static_cast<int>(modulus), *ctx->table_covering(n));
    } else {
      if (2 * r >= modulus) throw DomainError("r must satisfy 1 <= r < N/2");
      const AsymptoticDiffResult result =
          truncation > 0 ? theorem1_series(n, r, modulus, truncation, prec) : theorem1_main(n, r, modulus, prec);
      main1 = sci(result.main1);
      main2 = sci(result.main2);
      if (result.t1) t1 = sci(*result.t1);
      if (result.t2) t2 = sci(*result.t2);
      estimate_value = result.estimate;
      if (with_exact) {
        const auto table = ctx->table_covering(n);
        const auto sieve = ctx->sieve_covering(static_cast<int>(modulus), n);
        exact_value = part_diff_exact(n, static_cast<int>(r), static_cast<int>(modulus), *table, *sieve);
      }
    }
    estimate = sci(*estimate_value);
    if (exact_value) {
      exact = exact_value->get_str();
      const Real q = Real(*exact_value, prec) / *estimate_value;
      ratio = q.to_fixed(kRatioDecimals, false);
      cell = q.to_fixed(kCellDecimals, true);
    }

    record.n = n;
    record.modulus = modulus;
    record.residue = r;
    record.precision_bits = prec.bits();
    record.truncation = truncation;
    record.estimate = dup_optional(estimate);
    record.main1 = dup_optional(main1);
    record.main2 = dup_optional(main2);
    record.t1 = dup_optional(t1);
    record.t2 = dup_optional(t2);
    record.prefactor = dup_optional(prefactor);
    record.log_factor = dup_optional(log_factor);
    record.exact = dup_optional(exact);
    record.ratio = dup_optional(ratio);
    record.ratio_cell = dup_optional(cell);
  });
  if (status != PC_OK) {
    pc_record_free(&record);
    return status;
  }
  *out = record;
  return PC_OK;
}

void pc_record_free(pc_record* record) {
  if (!record) return;
  for (char** field : {&record->estimate, &record->main1, &record->main2, &record->t1, &record->t2, &record->prefactor,
                       &record->log_factor, &record->exact, &record->ratio, &record->ratio_cell}) {
    std::free(*field);
    *field = nullptr;
  }
}

size_t pc_suite_count(void) { return suite_names().size(); }

const char* pc_suite_name(size_t index) {
  const auto& names = suite_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

int pc_suite_is_default(const char* name) {
  if (!name) return 0;
  const auto& names = default_suites();
  return std::find(names.begin(), names.end(), name) != names.end() ? 1 : 0;
}

pc_status pc_verify_suite(const char* name, long max_modulus, pc_suite_report* out) {
  if (!name || !out) return fail(PC_ERR_INVALID_ARGUMENT, "null argument");
  std::memset(out, 0, sizeof(*out));
  return guarded([&] {
    VerifyOptions options;
    if (max_modulus > 0) options.max_modulus = max_modulus;
    const SuiteReport report = run_suite(name, options);
    pc_suite_report result{};
    result.name = dup(report.name);
    result.passed = report.passed ? 1 : 0;
    result.checks = report.checks;
    result.millis = report.millis;
    try {
      result.detail = dup(report.detail);
    } catch (...) {
      std::free(result.name);
      throw;
    }
    *out = result;
  });
}

void pc_suite_report_free(pc_suite_report* report) {
  if (!report) return;
  std::free(report->name);
  std::free(report->detail);
  report->name = nullptr;
  report->detail = nullptr;
}

}  // extern "C"
