// Prints D_S of the triadic Koch curve stage by stage, from the closed form
// and from the generated point set, next to ln 4 / ln 3.

#include <cmath>
#include <cstdio>

#include "wavedim.hpp"

int main() {
  const double limit = std::log(4.0) / std::log(3.0);
  std::printf("stage  closed_form  point_set    error\n");
  for (int s = 0; s <= 8; ++s) {
    const double closed = wavedim::sevcik_on_koch(s).value;
    const double points = s == 0 ? 1.0 : wavedim::sevcik_dimension(wavedim::koch_curve(s)).value;
    std::printf("%5d  %11.8f  %9.8f  %.2e\n", s, closed, points, std::abs(closed - limit));
  }
}
