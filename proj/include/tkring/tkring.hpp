#pragma once

#include <tkring/basis.hpp>
#include <tkring/cellular.hpp>
#include <tkring/cone.hpp>
#include <tkring/fan.hpp>
#include <tkring/gkm.hpp>
#include <tkring/io.hpp>
#include <tkring/lattice.hpp>
#include <tkring/laurent.hpp>
#include <tkring/plp.hpp>
