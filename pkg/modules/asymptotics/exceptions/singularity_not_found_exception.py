from modules.util.exceptions.domain_exception import DomainException


class SingularityNotFoundException(DomainException):
    pass
