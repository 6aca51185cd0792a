from .family_file import emit_family, parse_family, read_family
from .exporters import emit_dot, emit_edgelist, emit_family_dot, emit_graph6
