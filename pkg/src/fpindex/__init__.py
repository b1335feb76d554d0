"""Index the character-set fingerprints of a sequence for existence and
location queries."""
from .errors import *  # noqa: F401,F403
from .seqcore import (Alphabet, Fingerprint, MaximalLocation, Sequence, extend, fo,
                      fingerprint_of, is_maximal, lfo, normalize, o_label, support)
from .suffix_tree import SuffixTree, build_suffix_tree
from .participation_tree import EfoList, ParticipationTree, build_participation_tree
from .naming import name_fingerprints, name_list
from .polyhash import HashParams, find_injective, find_prime, hash_set, is_prime
from .set_equality import EqualityScratch, eq_bits, eq_hash, eq_partitioned
from .online_builders import build_mc, build_names_randomized, enumerate_change_lists
from .fingerprint_index import FingerprintIndex, build_backtrack, build_index, build_trie
from .oracle import gen_wk, oracle_all
from .serialization import dumps, load, loads, save

__version__ = "0.1.0"
