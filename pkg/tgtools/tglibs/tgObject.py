from typing import Dict
from json import dumps


class tgObject():
    """A common class for result objects which are
    reported on the command line.

    Subclasses set `schema` and implement `_to_dict()`.
    """

    schema = 'tgtools.object/1'

    def _to_dict(self) -> Dict:
        """Get attributes as a dictionary.
        Implemented by inherited classes."""
        return {}

    def to_dict(self) -> Dict:
        return {
            'schema': self.schema,
            **self._to_dict()
        }

    def to_json(self, indent: int = None) -> str:
        return dumps(
            self.to_dict(),
            indent=indent,
            ensure_ascii=False
        )

    def __eq__(self, other) -> bool:
        """Returns the equality between two tgObject objects."""
        if isinstance(self, other.__class__):
            return self._to_dict() == other._to_dict()
        return False

    def __hash__(self) -> int:
        return hash(self.to_json())
