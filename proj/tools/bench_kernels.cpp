// Timing comparison of the production kernels against the serial references,
// at each execution policy. Also checks serial and parallel agree exactly.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "kamienny/kernels.hpp"

using namespace kamienny;
using kernels::Exec;

namespace {

template <typename F>
double time_ms(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<i64> moduli = {243, 729, 2187};
  if (argc > 1) {
    moduli.clear();
    for (int i = 1; i < argc; ++i) moduli.push_back(std::atoll(argv[i]));
  }

  std::printf("%-8s %-22s %12s %12s %12s %10s\n", "q", "kernel", "ref ms", "serial ms",
              "parallel ms", "max diff");
  for (i64 q : moduli) {
    const PrimePowerLevel level = PrimePowerLevel::from_modulus(q);
    const Window wa(q, 3, std::max<i64>(5, q / 6));
    const Window wb(q, q / 2, std::max<i64>(5, q / 7));

    {
      double v_ref = 0, v_ser = 0, v_par = 0;
      const double t_ref = time_ms([&] { v_ref = kernels::lambda_offdiagonal_ref(level, wa, wb); });
      const double t_ser =
          time_ms([&] { v_ser = kernels::lambda_offdiagonal(level, wa, wb, Exec::serial); });
      const double t_par =
          time_ms([&] { v_par = kernels::lambda_offdiagonal(level, wa, wb, Exec::parallel); });
      const double diff = std::max(std::abs(v_ref - v_par), std::abs(v_ser - v_par));
      std::printf("%-8lld %-22s %12.2f %12.2f %12.2f %10.2e\n", q, "lambda_offdiagonal", t_ref,
                  t_ser, t_par, diff);
      if (v_ser != v_par) std::printf("  !! serial/parallel mismatch\n");
    }
    {
      kernels::SalieSweepResult r_ref, r_ser, r_par;
      const double t_ref = time_ms([&] { r_ref = kernels::salie_sweep_ref(level); });
      const double t_ser = time_ms([&] { r_ser = kernels::salie_sweep(level, Exec::serial); });
      const double t_par = time_ms([&] { r_par = kernels::salie_sweep(level, Exec::parallel); });
      const double diff = std::max(std::abs(r_ref.worst_ratio - r_par.worst_ratio),
                                   std::abs(r_ser.worst_ratio - r_par.worst_ratio));
      std::printf("%-8lld %-22s %12.2f %12.2f %12.2f %10.2e\n", q, "salie_sweep", t_ref, t_ser,
                  t_par, diff);
      if (r_ser.worst_ratio != r_par.worst_ratio || r_ser.h != r_par.h || r_ser.hp != r_par.hp)
        std::printf("  !! serial/parallel mismatch\n");
    }
  }
  return 0;
}
