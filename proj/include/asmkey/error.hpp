#pragma once

#include <stdexcept>
#include <string>

namespace asmkey {

// Every failure the library can signal. The CLI maps any Error to exit code 2.
enum class errc {
    bad_size,
    bad_entry,
    bad_line_sum,
    bad_alternation,
    bad_permutation,
    bad_triangle,
    bad_inversion_sequence,
    bad_dyck_word,
    not_removable,
    size_too_large,
    overflow,
    not_in_bijection_domain,
    contains_10,
    not_in_312_321_class,
    parse_error,
    unknown_pattern,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what)
{
    throw Error(code, what);
}

} // namespace asmkey
