// SPDX-License-Identifier: Apache-2.0

#include "corrlift/channel.hpp"

namespace corrlift {

std::pair<ComplexSignal, ComplexSignal> split_baud_rate(const ComplexSignal& h) {
  if (h.size() < 2) throw TooShort("split_baud_rate: need at least two taps");
  const int len = static_cast<int>(h.size());
  const int n_even = (len + 1) / 2;
  const int n_odd = len / 2;
  ComplexSignal even(n_even), odd(n_odd);
  for (int i = 0; i < n_even; ++i) even(i) = h(2 * i);
  for (int i = 0; i < n_odd; ++i) odd(i) = h(2 * i + 1);
  return {even, odd};
}

ComplexSignal merge_baud_rate(const ComplexSignal& h_even, const ComplexSignal& h_odd) {
  const int ne = static_cast<int>(h_even.size());
  const int no = static_cast<int>(h_odd.size());
  if (ne != no && ne != no + 1)
    throw DimensionMismatch("merge_baud_rate: tap counts cannot interleave");
  ComplexSignal h(ne + no);
  for (int i = 0; i < ne; ++i) h(2 * i) = h_even(i);
  for (int i = 0; i < no; ++i) h(2 * i + 1) = h_odd(i);
  return h;
}

CorrelationSet channel_correlations(const ChannelPair& pair) {
  if (is_zero_signal(pair.h1) || is_zero_signal(pair.h2))
    throw DegenerateSignal("channel_correlations: zero channel");
  return full_correlation_set(pair.h1, pair.h2);
}

}  // namespace corrlift
