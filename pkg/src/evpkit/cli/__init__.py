from evpkit.cli.certificates import solve_command, verify_command
from evpkit.cli.instances import analyze_command, validate_command
from evpkit.cli.scans import approx_command, scan_command

commands = [
    validate_command,
    solve_command,
    verify_command,
    scan_command,
    approx_command,
    analyze_command,
]
