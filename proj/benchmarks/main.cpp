#include <benchmark/benchmark.h>

// The packaged libbenchmark_main.a carries LTO bytecode tied to one compiler build.
BENCHMARK_MAIN();
