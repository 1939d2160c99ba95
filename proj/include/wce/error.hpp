/*
 * Error type
 *
 * Copyright 2026 wce-screen authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef WCE_ERROR_HPP
#define WCE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace wce {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace wce

#endif
