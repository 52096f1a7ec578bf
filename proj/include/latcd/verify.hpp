#ifndef LATCD_VERIFY_HPP_
#define LATCD_VERIFY_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace latcd {

  struct VerifyOptions {
    //! Overrides every check's default size bound when set.
    std::optional<std::size_t> max_size;
    //! Raises the bound of the slow checks by one.
    bool slow = false;
  };

  struct CheckResult {
    std::string suite;
    std::string name;
    std::size_t max_size = 0;
    std::size_t cases    = 0;
    bool        passed   = true;
    //! Reported only; never fails the suite.
    bool        informational = false;
    //! "<canonical code>: <clause>" for the first failing case, or a note.
    std::string detail;
  };

  struct VerifyReport {
    std::vector<CheckResult> checks;

    [[nodiscard]] bool passed() const noexcept;
  };

  //! core-ops, density-laws, skeleton, semimodular, formulas.
  [[nodiscard]] std::vector<std::string_view> suite_names();

  //! Runs one suite, or every suite for "all". Throws InvalidInput on an
  //! unknown suite name.
  [[nodiscard]] VerifyReport run_verify(std::string_view     suite,
                                        VerifyOptions const& options = {});

}  // namespace latcd

#endif  // LATCD_VERIFY_HPP_
