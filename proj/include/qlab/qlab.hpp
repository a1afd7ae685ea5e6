#pragma once

#include "qlab/abelianization.hpp"
#include "qlab/braid.hpp"
#include "qlab/errors.hpp"
#include "qlab/kernel.hpp"
#include "qlab/laurent.hpp"
#include "qlab/parser.hpp"
#include "qlab/pipeline.hpp"
#include "qlab/presentation.hpp"
#include "qlab/quandle.hpp"
#include "qlab/sl2_reps.hpp"
#include "qlab/smith.hpp"
#include "qlab/tietze.hpp"
#include "qlab/todd_coxeter.hpp"
#include "qlab/tym.hpp"
#include "qlab/verify.hpp"
#include "qlab/word.hpp"
