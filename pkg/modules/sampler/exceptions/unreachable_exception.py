from modules.util.exceptions.domain_exception import DomainException


class UnreachableException(DomainException):
    pass
