#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "skein/batch.hpp"
#include "skein/catalog.hpp"

using namespace skein;

namespace {

Gen G(std::initializer_list<int> vs) {
  Gen g = 0;
  for (int v : vs) g |= Gen(1) << (v - 1);
  return g;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

void bench_products() {
  struct Item {
    const char* name;
    Monomial m;
  };
  const std::vector<Item> items = {
      {"t12*t23", {G({1, 2}), G({2, 3})}},
      {"t13*t24", {G({1, 3}), G({2, 4})}},
      {"t14*t23", {G({1, 4}), G({2, 3})}},
      {"t14*t12*t23*t34", {G({1, 4}), G({1, 2}), G({2, 3}), G({3, 4})}},
      {"t12^2*t24*t34^2",
       {G({1, 2}), G({1, 2}), G({2, 4}), G({3, 4}), G({3, 4})}},
      {"t14^2*t23^2*t24",
       {G({1, 4}), G({1, 4}), G({2, 3}), G({2, 3}), G({2, 4})}},
      {"t14^2*t23*t24*t34",
       {G({1, 4}), G({1, 4}), G({2, 3}), G({2, 4}), G({3, 4})}},
  };
  std::printf("single products (fresh evaluator each, schedule 0):\n");
  for (const auto& it : items) {
    Evaluator ev(4);
    auto t0 = std::chrono::steady_clock::now();
    const SkeinElement& e = ev.evaluate(it.m);
    std::printf("  %-22s %8.1f ms  %4zu terms\n", it.name, ms_since(t0),
                e.terms().size());
  }
}

void bench_verify(bool serial) {
  Catalog cat = build_catalog();
  Evaluator ev(4);
  std::vector<VerifyReport> reps(cat.relations.size());
  auto t0 = std::chrono::steady_clock::now();
  parallel_for_index(
      cat.relations.size(),
      [&](std::size_t i) { reps[i] = verify_relation(cat.relations[i], ev); },
      serial);
  int bad = 0;
  for (const auto& r : reps) bad += !r.zero;
  std::printf("catalog verify (%s): %zu relations, %d failing, %.1f ms\n",
              serial ? "serial" : "parallel", reps.size(), bad, ms_since(t0));
}

}  // namespace

int main(int argc, char** argv) {
  bool serial_only = false;
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "--serial") serial_only = true;
  std::printf("openmp: %s\n", openmp_enabled() ? "on" : "off");
  bench_products();
  bench_verify(true);
  if (!serial_only) bench_verify(false);
  return 0;
}
