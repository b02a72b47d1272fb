#pragma once

#include "lieclass/classifier/classifier.hpp"
#include "lieclass/cone.hpp"
#include "lieclass/parabolic.hpp"
#include "lieclass/representations.hpp"
#include "lieclass/root_system.hpp"
