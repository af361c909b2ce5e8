from modules.util.exceptions.domain_exception import DomainException


class TruncationMismatchException(DomainException):
    pass
