#ifndef STRONGDIM_ERRORS_HPP
#define STRONGDIM_ERRORS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace strongdim {

/// Base for every error this library throws.
class error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Bad arguments: out-of-range ids, malformed parameters, loops, repeated edges.
class invalid_input : public error {
  public:
    using error::error;
};

class parse_error : public error {
  public:
    parse_error(const std::string& what, std::size_t offset)
        : error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

  private:
    std::size_t offset_;
};

class disconnected_graph : public error {
  public:
    disconnected_graph(std::int32_t u, std::int32_t v)
        : error("graph is disconnected: no path between " + std::to_string(u) + " and " + std::to_string(v)),
          u_(u), v_(v) {}
    std::int32_t from() const { return u_; }
    std::int32_t to() const { return v_; }

  private:
    std::int32_t u_, v_;
};

/// An exact search ran out of its node budget.
class budget_exceeded : public error {
  public:
    using error::error;
};

/// A closed formula's hypotheses do not hold for the instance.
class refusal : public error {
  public:
    refusal(std::string formula, std::vector<std::string> reasons)
        : error(compose(formula, reasons)), formula_(std::move(formula)), reasons_(std::move(reasons)) {}
    const std::string& formula() const { return formula_; }
    const std::vector<std::string>& reasons() const { return reasons_; }

  private:
    static std::string compose(const std::string& f, const std::vector<std::string>& rs) {
        std::string s = f + " does not apply:";
        for (const auto& r : rs) s += " " + r + ";";
        return s;
    }
    std::string formula_;
    std::vector<std::string> reasons_;
};

/// A formula produced an impossible value (e.g. an odd numerator that must be halved).
class formula_inconsistency : public error {
  public:
    using error::error;
};

}  // namespace strongdim

#endif
