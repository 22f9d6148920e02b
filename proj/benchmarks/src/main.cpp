#include <benchmark/benchmark.h>

// Own entry point: some distro builds ship benchmark_main with incompatible LTO bytecode.
BENCHMARK_MAIN();
