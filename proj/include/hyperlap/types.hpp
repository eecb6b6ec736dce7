#ifndef HYPERLAP_TYPES_HPP
#define HYPERLAP_TYPES_HPP

#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <boost/multiprecision/traits/is_byte_container.hpp>

// Boost 1.74's is_byte_container dereferences C::const_iterator, but Eigen 3.4
// typedefs const_iterator as void on two-dimensional expressions, so the trait
// hard-errors during overload resolution of any product or eval() over a
// rational matrix. Declaring it false for Eigen expression templates restores
// SFINAE before the multiprecision number constructors see them.
namespace boost::multiprecision::detail {
template <class S, int R, int C, int O, int MR, int MC>
struct is_byte_container<Eigen::Matrix<S, R, C, O, MR, MC>> : public boost::false_type {};
template <class X>
struct is_byte_container<Eigen::Transpose<X>> : public boost::false_type {};
template <class L, class R, int O>
struct is_byte_container<Eigen::Product<L, R, O>> : public boost::false_type {};
template <class Op, class L, class R>
struct is_byte_container<Eigen::CwiseBinaryOp<Op, L, R>> : public boost::false_type {};
template <class Op, class X>
struct is_byte_container<Eigen::CwiseUnaryOp<Op, X>> : public boost::false_type {};
template <class X, int R, int C, bool P>
struct is_byte_container<Eigen::Block<X, R, C, P>> : public boost::false_type {};
template <class X>
struct is_byte_container<Eigen::MatrixBase<X>> : public boost::false_type {};
template <class X>
struct is_byte_container<Eigen::DenseBase<X>> : public boost::false_type {};
}  // namespace boost::multiprecision::detail

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace hyperlap {

/// Exact rational scalar. Operator matrices, kernel bases and structural
/// statistics are kept in this type; doubles appear only inside the
/// eigensolver and in printed output.
using Rational = boost::multiprecision::cpp_rational;

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

enum class errc {
  empty_input_set,
  empty_output_set,
  unknown_vertex,
  unknown_hyperedge,
  duplicate_id,
  dimension_mismatch,
  no_hyperedges,
  zero_function,
  not_symmetric,
  no_convergence,
  multiplicity_mismatch,
  too_many_hyperedges,
  empty_subset,
  infeasible_family,
  syntax_error,
  io_error,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

/// Malformed input: bad files, bad documents, bad arguments.
inline bool is_input_error(errc c) {
  switch (c) {
    case errc::empty_input_set:
    case errc::empty_output_set:
    case errc::unknown_vertex:
    case errc::unknown_hyperedge:
    case errc::duplicate_id:
    case errc::dimension_mismatch:
    case errc::no_hyperedges:
    case errc::zero_function:
    case errc::too_many_hyperedges:
    case errc::empty_subset:
    case errc::infeasible_family:
    case errc::syntax_error:
    case errc::io_error:
      return true;
    default:
      return false;
  }
}

}  // namespace hyperlap

#endif  // HYPERLAP_TYPES_HPP
