#pragma once

#include "alphabet.hpp"
#include "bigint.hpp"
#include "coxeter.hpp"
#include "coxeter_graph.hpp"
#include "element.hpp"
#include "errors.hpp"
#include "reduced_words.hpp"
#include "sorting_networks.hpp"
#include "trace.hpp"
#include "word_poset.hpp"
