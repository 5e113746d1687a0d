from rich.console import Console

# status goes to stderr so reports on stdout stay byte-stable
console = Console(stderr=True, highlight=False)


def status(message: str, quiet: bool = False) -> None:
    if not quiet:
        console.print(message)
