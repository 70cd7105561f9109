#pragma once

#include <stdexcept>
#include <string>

namespace theta {

struct NonUnitConstantTerm : std::domain_error {
    explicit NonUnitConstantTerm(const std::string& what) : std::domain_error(what) {}
};

struct ParameterDomain : std::domain_error {
    explicit ParameterDomain(const std::string& what) : std::domain_error(what) {}
};

struct UnknownSeriesName : std::invalid_argument {
    explicit UnknownSeriesName(const std::string& what) : std::invalid_argument(what) {}
};

struct UnknownStatistic : std::invalid_argument {
    explicit UnknownStatistic(const std::string& what) : std::invalid_argument(what) {}
};

struct UnknownCheck : std::invalid_argument {
    explicit UnknownCheck(const std::string& what) : std::invalid_argument(what) {}
};

struct NotSubMultiset : std::domain_error {
    explicit NotSubMultiset(const std::string& what) : std::domain_error(what) {}
};

struct DomainViolation : std::domain_error {
    explicit DomainViolation(const std::string& what) : std::domain_error(what) {}
};

}  // namespace theta
