#pragma once

#include <homcost/acyclic_solver.hpp>
#include <homcost/antichain.hpp>
#include <homcost/classifier.hpp>
#include <homcost/costs.hpp>
#include <homcost/cycle_census.hpp>
#include <homcost/cycle_solver.hpp>
#include <homcost/digraph.hpp>
#include <homcost/dispatch.hpp>
#include <homcost/errors.hpp>
#include <homcost/flow.hpp>
#include <homcost/gadget.hpp>
#include <homcost/oracle.hpp>
#include <homcost/product.hpp>
#include <homcost/transforms.hpp>
#include <homcost/unicyclic.hpp>
