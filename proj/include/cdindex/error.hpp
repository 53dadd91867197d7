#ifndef CDINDEX_ERROR_HPP
#define CDINDEX_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cdx {

/* Domain errors carry a stable machine-readable code (e.g. "NonGradedCover",
 * "ElementNotFound") next to the human message. */
class CdxError : public std::runtime_error {
public:
    CdxError(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

} // namespace cdx

#endif
