#pragma once

#include <stdexcept>
#include <string>

namespace platocf
{
//! Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

//! Caller violated a documented precondition on an object's state.
class ContractError : public std::logic_error
{
  public:
    using std::logic_error::logic_error;
};

//! A numerical estimator could not produce a result from its input.
class EstimationError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace platocf
