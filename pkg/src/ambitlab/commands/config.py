import argparse
import json

from rich.console import Console
from rich.table import Table

from .. import config as settings

console = Console(stderr=True)

# Friendly names accepted by set/unset, mapped to the stored keys
KEY_MAP = {
    "max-window": "max_window",
    "samples": "action_law_samples",
    "action-law-samples": "action_law_samples",
    "ambitlab_home": "home",
}

KNOWN_KEYS = (
    "seed",
    "window",
    "count",
    "grid",
    "budget",
    "max_window",
    "action_law_samples",
    "home",
)


def handle_config(argv: list[str]) -> int:
    """Handle ambitlab config command."""
    parser = argparse.ArgumentParser(
        prog="ambitlab config", description="Manage persistent configuration settings."
    )
    parser.add_argument(
        "config_action",
        nargs="?",
        choices=["show", "set", "unset"],
        default="show",
        help="Action to perform (show, set, unset)",
    )
    parser.add_argument("config_params", nargs="*", help="Config key and optional value")
    args = parser.parse_args(argv)
    params = args.config_params

    if args.config_action == "show":
        show_config()
        return 0
    if args.config_action == "set":
        if len(params) < 2:
            console.print("[red]error:[/red] 'set' requires a key and a value.")
            console.print("Usage: ambitlab config set <key> <value>")
            return 2
        return set_config(params[0], params[1])
    if not params:
        console.print("[red]error:[/red] 'unset' requires a key.")
        return 2
    return unset_config(params[0])


def _read() -> dict:
    if not settings.CONFIG_FILE.exists():
        return {}
    try:
        with open(settings.CONFIG_FILE) as f:
            return json.load(f)
    except (json.JSONDecodeError, OSError) as e:
        console.print(f"[yellow]Warning: could not read existing config: {e}[/yellow]")
        return {}


def _write(config: dict) -> None:
    settings.CONFIG_FILE.parent.mkdir(parents=True, exist_ok=True)
    with open(settings.CONFIG_FILE, "w") as f:
        json.dump(config, f, indent=4, sort_keys=True)


def coerce_value(value: str):
    """'true'/'false' become bools, integers become ints, anything else stays text."""
    if value.lower() == "true":
        return True
    if value.lower() == "false":
        return False
    try:
        return int(value)
    except ValueError:
        return value


def show_config() -> None:
    """Show current persistent configuration."""
    config = _read()
    if not config:
        console.print(f"[dim]No persistent settings in {settings.CONFIG_FILE}[/dim]")
        return

    table = Table(title="ambitlab Persistent Configuration")
    table.add_column("Key", style="cyan")
    table.add_column("Value", style="green")
    for k, v in config.items():
        table.add_row(k, str(v))
    console.print(table)


def set_config(key: str, value: str) -> int:
    """Set a configuration value."""
    config_key = KEY_MAP.get(key, key)
    if config_key not in KNOWN_KEYS:
        console.print(f"[red]error:[/red] unknown key {key!r}; known: {', '.join(KNOWN_KEYS)}")
        return 2
    typed_value = coerce_value(value)
    if config_key != "home" and (
        isinstance(typed_value, bool) or not isinstance(typed_value, int) or typed_value < 1
    ):
        console.print(f"[red]error:[/red] {config_key} must be a positive integer")
        return 2

    config = _read()
    config[config_key] = typed_value
    _write(config)
    console.print(
        f"[green]✓[/green] Set [cyan]{config_key}[/cyan] to [green]{typed_value}[/green]"
    )
    return 0


def unset_config(key: str) -> int:
    """Remove a configuration key."""
    config_key = KEY_MAP.get(key, key)
    config = _read()
    if config_key not in config:
        console.print(f"[yellow]Key not found: {key}[/yellow]")
        return 0
    del config[config_key]
    _write(config)
    console.print(f"[green]✓[/green] Unset [cyan]{config_key}[/cyan]")
    return 0
