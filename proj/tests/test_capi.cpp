#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstring>
#include <filesystem>
#include <string>
#include <thread>
#include <vector>

#include "partclass/partclass.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  pc_string_free(s);
  return out;
}

struct Ctx {
  pc_context* ctx = nullptr;
  explicit Ctx(long bits = 0) { REQUIRE(pc_context_create(bits, &ctx) == PC_OK); }
  ~Ctx() { pc_context_destroy(ctx); }
};

}  // namespace

TEST_CASE("context lifecycle and precision") {
  pc_context* ctx = nullptr;
  CHECK(pc_context_create(32, &ctx) == PC_ERR_DOMAIN);
  CHECK(ctx == nullptr);
  CHECK(std::string(pc_last_error()).find("64") != std::string::npos);
  CHECK(pc_context_create(0, nullptr) == PC_ERR_INVALID_ARGUMENT);
  Ctx autoc;
  CHECK(pc_context_precision(autoc.ctx, 10) == 256);
  CHECK(pc_context_precision(autoc.ctx, 100000) == pc_auto_precision_bits(100000));
  Ctx fixed(512);
  CHECK(pc_context_precision(fixed.ctx, 100000) == 512);
  pc_context_destroy(nullptr);
  CHECK(std::string(pc_version()) == "1.0.0");
  CHECK(std::string(pc_status_name(PC_ERR_COVERAGE)) == "coverage");
}

TEST_CASE("exact counts") {
  Ctx c;
  char* out = nullptr;
  REQUIRE(pc_exact_count(c.ctx, 5, 3, 1, &out) == PC_OK);
  CHECK(take(out) == "13");
  REQUIRE(pc_exact_count(c.ctx, 5, 3, 2, &out) == PC_OK);
  CHECK(take(out) == "5");
  REQUIRE(pc_exact_count(c.ctx, 6, 3, 0, &out) == PC_OK);
  CHECK(take(out) == "5");
  REQUIRE(pc_exact_difference(c.ctx, 5, 3, 2, &out) == PC_OK);
  CHECK(take(out) == "-8");
  REQUIRE(pc_partition_number(c.ctx, 100, &out) == PC_OK);
  CHECK(take(out) == "190569292");
  CHECK(pc_exact_count(c.ctx, 5, 3, 3, &out) == PC_ERR_DOMAIN);
  CHECK(out == nullptr);
  CHECK(pc_exact_count(c.ctx, -1, 3, 1, &out) == PC_ERR_DOMAIN);
  REQUIRE(pc_exact_difference(c.ctx, 5, 4, 2, &out) == PC_OK);
  CHECK(take(out) == "0");
  CHECK(pc_exact_difference(c.ctx, 5, 4, 0, &out) == PC_ERR_DOMAIN);
  CHECK(pc_exact_count(nullptr, 5, 3, 1, &out) == PC_ERR_INVALID_ARGUMENT);
  CHECK(pc_table_max_n(c.ctx) >= 100);
}

TEST_CASE("asymptotic records") {
  Ctx c;
  pc_record rec{};
  REQUIRE(pc_asymptotic(c.ctx, 10, 3, 1, 0, 1, &rec) == PC_OK);
  CHECK(rec.n == 10);
  CHECK(rec.residue == 1);
  CHECK(rec.precision_bits == 256);
  CHECK(std::string(rec.exact) == "63");
  CHECK(std::string(rec.ratio) == "1.0041720992");
  CHECK(std::string(rec.ratio_cell) == "1.00417");
  CHECK(std::string(rec.estimate).find("e+01") != std::string::npos);
  CHECK(rec.main1 != nullptr);
  CHECK(rec.t1 == nullptr);
  CHECK(rec.prefactor == nullptr);
  pc_record_free(&rec);
  CHECK(rec.estimate == nullptr);
  pc_record_free(&rec);  // idempotent

  REQUIRE(pc_asymptotic(c.ctx, 10, 6, 0, 0, 1, &rec) == PC_OK);
  CHECK(std::string(rec.ratio_cell) == "-0.81043");
  CHECK(rec.log_factor != nullptr);
  CHECK(rec.main1 == nullptr);
  pc_record_free(&rec);

  REQUIRE(pc_asymptotic(c.ctx, 100, 3, 1, 10, 0, &rec) == PC_OK);
  CHECK(rec.t1 != nullptr);
  CHECK(rec.t2 != nullptr);
  CHECK(rec.exact == nullptr);
  CHECK(std::string(rec.estimate).rfind("9.02843259", 0) == 0);
  pc_record_free(&rec);

  CHECK(pc_asymptotic(c.ctx, 100, 4, 3, 0, 0, &rec) == PC_ERR_DOMAIN);
  CHECK(rec.estimate == nullptr);
  CHECK(pc_asymptotic(c.ctx, 100, 5, 2, 0, 0, &rec) == PC_OK);
  pc_record_free(&rec);
  CHECK(pc_asymptotic(c.ctx, 100, 6, 0, 5, 0, &rec) == PC_ERR_DOMAIN);
}

TEST_CASE("last error is per thread") {
  Ctx c;
  char* out = nullptr;
  CHECK(pc_exact_count(c.ctx, 5, 3, 7, &out) == PC_ERR_DOMAIN);
  const std::string here = pc_last_error();
  CHECK_FALSE(here.empty());
  std::string there = "unset";
  std::thread([&] { there = pc_last_error(); }).join();
  CHECK(there.empty());
  REQUIRE(pc_exact_count(c.ctx, 5, 3, 1, &out) == PC_OK);
  pc_string_free(out);
  CHECK(std::string(pc_last_error()).empty());
}

TEST_CASE("concurrent use of one context") {
  Ctx c;
  REQUIRE(pc_table_ensure(c.ctx, 1000) == PC_OK);
  std::vector<std::string> ratios(6);
  std::vector<std::thread> threads;
  const long ns[] = {10, 100, 1000, 10, 100, 1000};
  for (int i = 0; i < 6; ++i) {
    threads.emplace_back([&, i] {
      pc_record rec{};
      if (pc_asymptotic(c.ctx, ns[i], 3, 0, 0, 1, &rec) == PC_OK) ratios[static_cast<std::size_t>(i)] = rec.ratio_cell;
      pc_record_free(&rec);
    });
  }
  for (auto& t : threads) t.join();
  CHECK(ratios[0] == "1.79224");
  CHECK(ratios[1] == "1.06709");
  CHECK(ratios[2] == "1.01177");
  CHECK(ratios[3] == ratios[0]);
}

TEST_CASE("table files") {
  const auto path = std::filesystem::temp_directory_path() / ("pc_capi_" + std::to_string(::getpid()) + ".ptable");
  {
    Ctx c;
    CHECK(pc_table_save(c.ctx, path.c_str()) == PC_ERR_COVERAGE);
    REQUIRE(pc_table_ensure(c.ctx, 200) == PC_OK);
    REQUIRE(pc_table_save(c.ctx, path.c_str()) == PC_OK);
  }
  Ctx c;
  REQUIRE(pc_table_load(c.ctx, path.c_str()) == PC_OK);
  CHECK(pc_table_max_n(c.ctx) == 200);
  std::filesystem::remove(path);
  CHECK(pc_table_load(c.ctx, path.c_str()) == PC_ERR_IO);
  CHECK(pc_table_ensure(c.ctx, -5) == PC_ERR_DOMAIN);
}

TEST_CASE("verify through the C API") {
  CHECK(pc_suite_count() >= 10);
  CHECK(pc_suite_is_default("dedekind") == 1);
  CHECK(pc_suite_is_default("t1") == 0);
  CHECK(pc_suite_name(pc_suite_count()) == nullptr);
  pc_suite_report report{};
  REQUIRE(pc_verify_suite("dedekind", 0, &report) == PC_OK);
  CHECK(report.passed == 1);
  CHECK(std::string(report.name) == "dedekind");
  pc_suite_report_free(&report);
  CHECK(pc_verify_suite("nope", 0, &report) == PC_ERR_DOMAIN);
}
