/* SPDX-License-Identifier: Apache-2.0 */
#include "apolar/trace.hpp"

#include <mutex>
#include <ostream>

namespace apolar::trace {

namespace {
std::ostream* g_sink = nullptr;
std::mutex g_mutex;
}  // namespace

void set_sink(std::ostream* sink) { g_sink = sink; }

bool enabled() { return g_sink != nullptr; }

void matrix(const std::string& label, const RationalMatrix& m) {
  if (!g_sink) return;
  std::lock_guard<std::mutex> lock(g_mutex);
  *g_sink << "== " << label << " (" << m.rows() << "x" << m.cols() << ") ==\n";
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      *g_sink << (j ? " " : "") << to_string(m.at(i, j));
    }
    *g_sink << "\n";
  }
  g_sink->flush();
}

}  // namespace apolar::trace
