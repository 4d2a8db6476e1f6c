#pragma once

#include <stdexcept>
#include <string>

namespace vam {

enum class errc {
    dimension_mismatch,
    degenerate_vertex,
    degenerate_points,
    coincident_points,
    invalid_parameter,
    outside_domain,
    on_boundary,
    unsupported_domain,
    kind_mismatch,
    map_domain_mismatch,
    out_of_interval,
    internal
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::dimension_mismatch: return "dimension_mismatch";
        case errc::degenerate_vertex: return "degenerate_vertex";
        case errc::degenerate_points: return "degenerate_points";
        case errc::coincident_points: return "coincident_points";
        case errc::invalid_parameter: return "invalid_parameter";
        case errc::outside_domain: return "outside_domain";
        case errc::on_boundary: return "on_boundary";
        case errc::unsupported_domain: return "unsupported_domain";
        case errc::kind_mismatch: return "kind_mismatch";
        case errc::map_domain_mismatch: return "map_domain_mismatch";
        case errc::out_of_interval: return "out_of_interval";
        case errc::internal: return "internal";
    }
    return "unknown";
}

/// Error type carried by every throwing operation in the library.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace vam
