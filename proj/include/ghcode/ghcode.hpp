#pragma once
// ghcode.hpp - umbrella header for the GH / Fibonacci coding toolkit

#include "integer.hpp"
#include "sequence.hpp"
#include "bitcode.hpp"
#include "fib_codec.hpp"
#include "gh_codec.hpp"
#include "oracle.hpp"
#include "stream.hpp"
