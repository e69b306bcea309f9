#include <iostream>

#include "liesc/io.hpp"
#include "liesc/liesc.hpp"

int main() {
  const liesc::LieAlgebra L = liesc::heisenberg(2, liesc::Domain::prime(3));
  std::cout << "Frattinian: " << std::boolalpha << liesc::is_frattinian(L).is_frattinian << "\n";
  const liesc::DecompositionCertificate cert = liesc::decompose(L);
  std::cout << "case " << liesc::to_string(cert.kind) << " with " << cert.factors.size() << " factors\n";
  for (const auto& f : cert.factors) std::cout << "  " << liesc::io::format_subspace(f, &L) << "\n";
  std::cout << "certificate verified: " << liesc::verify_certificate(L, cert).passed() << "\n";
}
