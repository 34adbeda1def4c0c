#ifndef GPI_ERROR_HPP
#define GPI_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace gpi {

// All library errors carry a stable machine-readable code next to the
// human-readable message; the CLI surfaces the code verbatim.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace gpi

#endif
