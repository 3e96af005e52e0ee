"""Modular structure of tournaments and single subtournament reversals."""
from .core import (Arc, CapExceeded, Tournament, TournamentError, dual, from_rows,
                   invert_arcs, invert_vertices, is_transitive, make_tournament,
                   subtournament)
from .generators import counterexample_tn, fact2_extremal, random_tournament, transitive
from .modtree import (all_nontrivial_modules, is_indecomposable, is_module, md_tree,
                      module_closure, transitive_components, twins)
from .comod import (chain_elements, comodular_index, minimal_comodules, overlap_degree,
                    transversal_number)
from .transversal import build_transversal, check_tr_membership, enumerate_tr, r_of_component
from .indices import (brute_delta, brute_delta_prime, class_r_membership, delta, delta_prime,
                      verify_theorem8)

__version__ = "0.1.0"
