"""Base API class for all namespace implementations."""

from typing import TYPE_CHECKING, Optional

from ..core.scalars import check_field

if TYPE_CHECKING:
    from ..client import AppellClient


class BaseAPI:
    """Base class for all namespaces; carries the client's default field."""

    def __init__(self, client: "AppellClient"):
        self.client = client
        self.field = client.field

    def _field(self, field: Optional[str]) -> str:
        return check_field(field or self.field)
