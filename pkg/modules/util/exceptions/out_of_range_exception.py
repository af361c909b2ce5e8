from modules.util.exceptions.domain_exception import DomainException


class OutOfRangeException(DomainException):
    pass
