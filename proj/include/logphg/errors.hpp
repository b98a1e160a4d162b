#ifndef LOGPHG_ERRORS_HPP
#define LOGPHG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace logphg {

enum class errc {
    degree_mismatch,
    degenerate_degree,
    residue_obstruction,
    unsupported_dimension,
    unsupported_transform,
    non_real_degree,
    integer_order,
    empty_symbol,
    singular_matrix,
    ill_conditioned,
    basis_missing,
    parse_error,
    invalid_argument,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::degree_mismatch: return "DegreeMismatch";
        case errc::degenerate_degree: return "DegenerateDegree";
        case errc::residue_obstruction: return "ResidueObstruction";
        case errc::unsupported_dimension: return "UnsupportedDimension";
        case errc::unsupported_transform: return "UnsupportedTransform";
        case errc::non_real_degree: return "NonRealDegree";
        case errc::integer_order: return "IntegerOrder";
        case errc::empty_symbol: return "EmptySymbol";
        case errc::singular_matrix: return "SingularMatrix";
        case errc::ill_conditioned: return "IllConditioned";
        case errc::basis_missing: return "BasisMissing";
        case errc::parse_error: return "ParseError";
        case errc::invalid_argument: return "InvalidArgument";
    }
    return "UnknownError";
}

class calc_error : public std::runtime_error {
public:
    calc_error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
    throw calc_error(code, what);
}

} // namespace logphg

#endif
