#pragma once

#include "word.hpp"
#include "index.hpp"
#include "wordlist.hpp"
#include "serialize.hpp"
#include "bench.hpp"
#include "synth.hpp"
