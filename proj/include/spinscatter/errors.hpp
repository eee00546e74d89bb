#pragma once

#include <stdexcept>
#include <string>

namespace spinscatter {

// Malformed argument values: labels out of range, wrong parity,
// unnormalized states, non-positive masses, bad basis tags.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A requested (l, s) channel is absent from a phase-shift table.
struct ChannelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A momentum query outside a channel's sampled grid; tables never extrapolate.
struct GridRangeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Phase-shift file rejected at load time; line() is the 1-based offending line.
class TableLoadError : public std::runtime_error {
  public:
    TableLoadError(const std::string &source, int line, const std::string &what)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " + what),
          source_(source), line_(line) {}

    const std::string &source() const { return source_; }
    int line() const { return line_; }

  private:
    std::string source_;
    int line_;
};

} // namespace spinscatter
