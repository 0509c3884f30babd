/*
 * Copyright (c) 2026 The uavnet authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef UAVNET_ERROR_HPP
#define UAVNET_ERROR_HPP

#include <stdexcept>
#include <string>

namespace uavnet
{

enum class ErrorCode
{
    InvalidArgument,
    InvalidParams,
    ParseError,
    UnknownKey,
    UnitError,
    NonConvergence,
    NonFiniteEvaluation,
    DegenerateSupport,
    DegenerateTier,
};

const char* ToString(ErrorCode code);

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error
{
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what),
          m_code(code)
    {
    }

    ErrorCode Code() const noexcept
    {
        return m_code;
    }

  private:
    ErrorCode m_code;
};

} // namespace uavnet

#endif // UAVNET_ERROR_HPP
