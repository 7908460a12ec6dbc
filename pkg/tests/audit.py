"""Session-wide log of every Gröbner basis computed while the tests run."""
from laurentcodes.groebner import recording

_block = recording()
BASES = _block.__enter__()
