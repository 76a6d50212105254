#include "fekete/log_magnitude.hpp"

namespace fekete {

double log_sum_exp(std::span<const double> terms) {
  LogSumExpAccumulator acc;
  for (double t : terms) acc.add(t);
  return acc.result();
}

}  // namespace fekete
