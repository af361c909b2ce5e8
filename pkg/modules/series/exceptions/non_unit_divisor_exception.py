from modules.util.exceptions.domain_exception import DomainException


class NonUnitDivisorException(DomainException):
    pass
