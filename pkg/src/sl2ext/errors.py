class CapExceeded(RuntimeError):
    """An enumeration produced more items than its configured cap."""

    def __init__(self, cap: int, what: str = "items"):
        super().__init__(f"enumeration exceeded cap of {cap} {what}")
        self.cap = cap
