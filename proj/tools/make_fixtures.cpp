// Writes the bundled .vgf fixtures into the directory given as the first argument.
#include <fstream>
#include <iostream>

#include "virtgraph/io.hpp"

using namespace vg;

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures DIR\n";
    return 2;
  }
  std::string dir = argv[1];
  auto put = [&](const std::string& name, const SpatialDiagram& d) {
    std::ofstream(dir + "/" + name + ".vgf") << serialize_vgf(d);
  };
  namespace fx = fixtures;
  put("theta_p", crossingless(fx::theta_p()));
  put("theta_t", crossingless(fx::theta_t()));
  put("loop1", crossingless(fx::loop1()));
  put("bouquet2_int", crossingless(fx::bouquet2_int()));
  put("bridge", crossingless(fx::bridge()));
  put("k33_std", crossingless(fx::k33_std()));
  put("k4", crossingless(fx::k4()));
  put("theta_t_as_spatial", fx::theta_t_as_spatial());
  put("k4_r2", fx::k4_r2());
  put("trefoil", fx::trefoil());
  put("knotted_theta", fx::knotted_theta());
  put("k33_drawn", fx::k33_drawn());
  // decorated examples
  put("theta_p_twisted", crossingless(edge_twist(fx::theta_p(), 0)));
  SpatialDiagram signed_theta;
  signed_theta.base = set_vertex_sign(with_parity_signs(fx::theta_p()), 0, 1);
  put("theta_p_signed", signed_theta);
  return 0;
}
