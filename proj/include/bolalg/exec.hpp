#ifndef BOLALG_EXEC_HPP
#define BOLALG_EXEC_HPP

namespace bolalg {

// Selects the OpenMP kernels or the plain serial loops they are tested
// against. Both paths produce identical results.
enum class Exec { serial, parallel };

} // namespace bolalg

#endif // BOLALG_EXEC_HPP
