#pragma once

#include "certificate.hpp"
#include "certificate_io.hpp"
#include "corpus.hpp"
#include "coxeter_graph.hpp"
#include "graph_io.hpp"
#include "partition.hpp"
#include "recognizers.hpp"
#include "search.hpp"
#include "verify.hpp"
