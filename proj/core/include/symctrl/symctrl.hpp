#pragma once

#include <symctrl/certificate.hpp>
#include <symctrl/certify.hpp>
#include <symctrl/control.hpp>
#include <symctrl/errors.hpp>
#include <symctrl/exact_matrix.hpp>
#include <symctrl/generate.hpp>
#include <symctrl/graph.hpp>
#include <symctrl/graph_io.hpp>
#include <symctrl/hamiltonian.hpp>
#include <symctrl/mod_matrix.hpp>
#include <symctrl/polynomial.hpp>
#include <symctrl/rational.hpp>
#include <symctrl/report.hpp>
#include <symctrl/symbolic.hpp>
