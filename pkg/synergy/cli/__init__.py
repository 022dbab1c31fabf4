from synergy.cli.commands import EXIT_INPUT, EXIT_INVALID, EXIT_OK, build_parser, run_command
from synergy.cli.text_format import (
    format_hull_certificate,
    format_maxima_certificate,
    format_points,
    parse_hull_certificate,
    parse_maxima_certificate,
    parse_points,
)
