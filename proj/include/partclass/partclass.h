#ifndef PARTCLASS_PARTCLASS_H
#define PARTCLASS_PARTCLASS_H

/* C interface to libpartclass: exact and asymptotic counts of parts of
 * integer partitions lying in a residue class.
 *
 * Every call returns a pc_status. On failure the message for the calling
 * thread is available from pc_last_error(). Strings handed out by the
 * library are released with pc_string_free(); records with their own
 * *_free function. */

#include <stddef.h>

#if defined(PARTCLASS_BUILDING)
#define PC_API __attribute__((visibility("default")))
#else
#define PC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pc_status {
  PC_OK = 0,
  PC_ERR_DOMAIN = 1,
  PC_ERR_POLE = 2,
  PC_ERR_COVERAGE = 3,
  PC_ERR_RESOURCE = 4,
  PC_ERR_GUARD = 5,
  PC_ERR_SINGULARITY = 6,
  PC_ERR_IMAGINARY_RESIDUE = 7,
  PC_ERR_KIND = 8,
  PC_ERR_SHAPE = 9,
  PC_ERR_INDEX = 10,
  PC_ERR_FORMAT = 11,
  PC_ERR_IO = 12,
  PC_ERR_INVALID_ARGUMENT = 13,
  PC_ERR_INTERNAL = 14
} pc_status;

typedef struct pc_context pc_context;

PC_API const char* pc_version(void);
PC_API const char* pc_status_name(pc_status status);
/* Message of the last failed call on this thread ("" if none). */
PC_API const char* pc_last_error(void);
PC_API void pc_string_free(char* s);

/* max(256, ceil(pi sqrt(2n/3) / log 2) + 64) */
PC_API long pc_auto_precision_bits(long n);

/* precision_bits = 0 selects the automatic rule per n; otherwise >= 64. */
PC_API pc_status pc_context_create(long precision_bits, pc_context** out);
PC_API void pc_context_destroy(pc_context* ctx);
PC_API long pc_context_precision(const pc_context* ctx, long n);

/* p(n) table held by the context. Tables grow on demand; these calls make
 * coverage explicit and move it to and from PTABLE v1 files. */
PC_API pc_status pc_table_ensure(pc_context* ctx, long max_n);
PC_API long pc_table_max_n(const pc_context* ctx);
PC_API pc_status pc_table_load(pc_context* ctx, const char* path);
PC_API pc_status pc_table_save(pc_context* ctx, const char* path);

/* p(n) as a decimal string. */
PC_API pc_status pc_partition_number(pc_context* ctx, long n, char** out);
/* Total number of parts = r (mod N) over all partitions of n; 0 <= r < N.
 * r = 0 is the count of parts divisible by N. */
PC_API pc_status pc_exact_count(pc_context* ctx, long n, long modulus, long r, char** out);
/* Count for r minus count for N - r, gcd(r, N) = 1. */
PC_API pc_status pc_exact_difference(pc_context* ctx, long n, long modulus, long r, char** out);

/* One evaluated asymptotic. Decimal strings; NULL where not applicable.
 * residue 0 selects the zero class (terms prefactor/log_factor),
 * otherwise 1 <= r < N/2 with gcd(r, N) = 1 (terms main1/main2 and, with a
 * truncation, the series t1/t2). */
typedef struct pc_record {
  long n;
  long modulus;
  long residue;
  long precision_bits;
  long truncation; /* 0: two-term estimate */
  char* estimate;  /* 30 significant digits, explicit exponent */
  char* main1;
  char* main2;
  char* t1;
  char* t2;
  char* prefactor;
  char* log_factor;
  char* exact;     /* with_exact only */
  char* ratio;     /* exact / estimate, 10 decimals */
  char* ratio_cell; /* exact / estimate truncated toward zero to 5 decimals */
} pc_record;

PC_API pc_status pc_asymptotic(pc_context* ctx, long n, long modulus, long r, long truncation, int with_exact,
                               pc_record* out);
PC_API void pc_record_free(pc_record* record);

typedef struct pc_suite_report {
  char* name;
  int passed;
  long checks;
  char* detail;
  double millis;
} pc_suite_report;

PC_API size_t pc_suite_count(void);
PC_API const char* pc_suite_name(size_t index);
PC_API int pc_suite_is_default(const char* name);
PC_API pc_status pc_verify_suite(const char* name, long max_modulus, pc_suite_report* out);
PC_API void pc_suite_report_free(pc_suite_report* report);

#ifdef __cplusplus
}
#endif

#endif /* PARTCLASS_PARTCLASS_H */
