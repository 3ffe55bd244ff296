"""Terminal colors for report statuses and diagnostics."""
from abc import ABCMeta


class ColoredType(ABCMeta):
    """Metaclass that exposes one coloring function per semantic role as a class attribute."""

    ROLES = {
        'passed': 32,  # green
        'failed': 31,  # red
        'errored': 33,  # yellow
        'diagnostic': 33,  # yellow
        'note': 36,  # cyan
    }
    """:py:class:`dict`: a mapping of output roles to the ANSI foreground color code."""

    def __getattr__(cls, name):  # noqa: N805
        """Resolve a role name to its coloring function.

        :Parameters:
            according to Python's Data model :py:meth:`object.__getattr__`.

        """
        color_code = ColoredType.ROLES.get(name, None)
        if color_code is None:
            raise AttributeError("'{cls}' object has no attribute '{attr}'".format(cls=cls.__name__, attr=name))

        return lambda obj: cls._color(color_code, obj)


class Colored(metaclass=ColoredType):
    """Colored output, one function per role of :py:const:`ColoredType.ROLES`.

    Examples::

        Colored.failed('fail')
        Colored.for_status('pass')('pass')

    """

    disabled = False
    """:py:class:`bool`: switch to globally control the coloring. Set it to :py:const`True` to disable all coloring."""

    STATUS_ROLES = {'pass': 'passed', 'fail': 'failed', 'error': 'errored'}
    """:py:class:`dict`: the role used for each report status."""

    @classmethod
    def for_status(cls, status):
        """Return the coloring function of a report status, the identity for unknown statuses.

        Arguments:
            status (str): one of ``pass``, ``fail``, ``error``.

        Returns:
            callable: a function that colors its argument.

        """
        role = cls.STATUS_ROLES.get(status)
        if role is None:
            return str

        return getattr(cls, role)

    @staticmethod
    def _color(color_code, obj):
        """Color the given object, unless coloring is globally disabled.

        Arguments:
            color_code (int): a valid ANSI escape sequence color code.
            obj (mixed): the object to color.

        Return:
            str: the string representation of the object encapsulated in the ANSI escape sequence.

        """
        message = str(obj)

        if not message or Colored.disabled:
            return message

        return '\x1b[{code}m{message}\x1b[39m'.format(code=color_code, message=message)
